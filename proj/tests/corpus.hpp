#pragma once

// Graph corpus shared by the unit tests and the acceptance binary.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cubrep/graph.hpp"
#include "cubrep/oracle.hpp"
#include "cubrep/random_lab.hpp"
#include "cubrep/rng.hpp"

namespace corpus {

using cubrep::Edge;
using cubrep::Graph;
using cubrep::Vertex;

struct Named {
  std::string name;
  Graph graph;
};

// Every labeled graph on 1..max_n vertices (1099 for max_n = 5).
inline std::vector<Named> all_labeled(std::size_t max_n = 5) {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::uint32_t masks = 1U << cubrep::oracle::pair_count(n);
    for (std::uint32_t m = 0; m < masks; ++m)
      out.push_back({"n" + std::to_string(n) + "_mask" + std::to_string(m), cubrep::oracle::graph_from_mask(n, m)});
  }
  return out;
}

// Random recursive tree: vertex i joins a uniformly random earlier vertex,
// then labels are shuffled.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  cubrep::Rng rng(seed);
  std::vector<Vertex> label(n);
  for (Vertex i = 0; i < n; ++i) label[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(label[i], label[rng.below(i)]);
  return Graph(n, e);
}

inline Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, e);
}

// Random triangulation of a convex polygon (outerplanar, maximal).
inline Graph triangulated_polygon(std::size_t n, std::uint64_t seed) {
  cubrep::Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  std::vector<Vertex> poly(n);
  for (Vertex i = 0; i < n; ++i) poly[i] = i;
  while (poly.size() > 3) {  // clip a random ear
    const std::size_t i = rng.below(poly.size());
    const Vertex a = poly[(i + poly.size() - 1) % poly.size()], b = poly[(i + 1) % poly.size()];
    e.emplace_back(std::min(a, b), std::max(a, b));
    poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return Graph(n, e);
}

// Grid with random diagonals: planar, up to 3-degenerate.
inline Graph triangulated_grid(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  cubrep::Rng rng(seed);
  std::vector<Edge> e = grid(rows, cols).edges();
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r + 1 < rows; ++r)
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      if (rng.bernoulli(1, 2))
        e.emplace_back(id(r, c), id(r + 1, c + 1));
      else
        e.emplace_back(id(r, c + 1), id(r + 1, c));
    }
  return Graph(rows * cols, e);
}

inline std::vector<Named> random_trees(std::size_t count, std::uint64_t seed) {
  std::vector<Named> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 6 + (i * 7) % 95;
    out.push_back({"tree" + std::to_string(i) + "_n" + std::to_string(n),
                   random_tree(n, cubrep::derive_seed(seed, i))});
  }
  return out;
}

inline std::vector<Named> planar_sparse(std::size_t count, std::uint64_t seed) {
  std::vector<Named> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = cubrep::derive_seed(seed, i);
    switch (i % 3) {
      case 0: {
        const std::size_t r = 2 + i % 5, c = 3 + i % 7;
        out.push_back({"grid" + std::to_string(r) + "x" + std::to_string(c), grid(r, c)});
        break;
      }
      case 1: {
        const std::size_t n = 6 + (i * 5) % 60;
        out.push_back({"polygon" + std::to_string(n), triangulated_polygon(n, s)});
        break;
      }
      default: {
        const std::size_t r = 2 + i % 4, c = 3 + i % 6;
        out.push_back({"trigrid" + std::to_string(r) + "x" + std::to_string(c), triangulated_grid(r, c, s)});
      }
    }
  }
  return out;
}

// G(n, c/(n-1)) for n up to 200, c in a few sparse-to-moderate settings.
inline std::vector<Named> gnp_graphs(std::size_t count, std::uint64_t seed) {
  static const std::size_t sizes[] = {10, 20, 40, 60, 100, 150, 200};
  static const std::uint64_t cs[] = {1, 2, 4, 8};
  std::vector<Named> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = sizes[i % 7];
    const std::uint64_t c = cs[(i / 7) % 4];
    const cubrep::Rational p = cubrep::Rational(c) / cubrep::Rational(n - 1);
    out.push_back({"gnp_n" + std::to_string(n) + "_c" + std::to_string(c) + "_" + std::to_string(i),
                   cubrep::gen_gnp(n, p > 1 ? cubrep::Rational(1) : p, cubrep::derive_seed(seed, i))});
  }
  return out;
}

// The full correctness corpus: all graphs n <= 5 plus larger families.
inline std::vector<Named> full(std::uint64_t seed = 2024) {
  auto out = all_labeled(5);
  for (auto* part : {&random_trees, &planar_sparse, &gnp_graphs}) {
    auto more = (*part)(part == &gnp_graphs ? 28 : 40, cubrep::derive_seed(seed, out.size()));
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

// Larger graphs only (n >= 6).
inline std::vector<Named> large(std::uint64_t seed = 2024) {
  auto all = full(seed);
  std::vector<Named> out;
  for (auto& g : all)
    if (g.graph.vertex_count() >= 6) out.push_back(std::move(g));
  return out;
}

}  // namespace corpus
