#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubrep/coloring.hpp"
#include "cubrep/errors.hpp"
#include "cubrep/graph.hpp"
#include "cubrep/interval.hpp"
#include "cubrep/numeric.hpp"

namespace cubrep {

enum class BuildMode { deterministic, randomized, decomposition };

inline const char* to_string(BuildMode m) {
  switch (m) {
    case BuildMode::deterministic: return "det";
    case BuildMode::randomized: return "rand";
    case BuildMode::decomposition: return "decomposition";
  }
  return "?";
}

struct RepresentationMeta {
  std::size_t n = 0;
  std::size_t k = 0;
  BuildMode mode = BuildMode::deterministic;
  std::uint64_t seed = 0;
  std::size_t stages = 0;        // colorings used (deterministic alpha or randomized b)
  std::size_t palette_size = 0;  // colors per coloring
  std::size_t attempts = 0;      // randomized redraws until acceptance
  std::size_t universal_added = 0;
  bool pruned = false;           // greedy post-pass, not part of the construction
  std::uint64_t dimension_bound = 0;
};

struct CubeRepresentation {
  std::vector<IntervalRep> dims;
  std::uint64_t source_graph_hash = 0;
  RepresentationMeta meta;

  std::size_t vertex_count() const { return dims.empty() ? meta.n : dims.front().vertex_count(); }
  std::size_t dimension() const noexcept { return dims.size(); }

  friend bool operator==(const CubeRepresentation& a, const CubeRepresentation& b) {
    return a.dims == b.dims && a.source_graph_hash == b.source_graph_hash &&
           a.meta.n == b.meta.n && a.meta.k == b.meta.k && a.meta.mode == b.meta.mode &&
           a.meta.seed == b.meta.seed && a.meta.stages == b.meta.stages &&
           a.meta.palette_size == b.meta.palette_size && a.meta.attempts == b.meta.attempts &&
           a.meta.universal_added == b.meta.universal_added && a.meta.pruned == b.meta.pruned &&
           a.meta.dimension_bound == b.meta.dimension_bound;
  }
};

// Dimension for color class j of `coloring`, over the ordered vertex ids
// (vertex v has 1-based index y = v + 1):
//   colored j:  [y + n, y + 2n]
//   otherwise:  [g, g + n], g = largest index of a j-colored neighbor, or 0.
inline IntervalRep build_dimension(const OrderedGraph& og, const Coloring& coloring, Color j,
                                   std::size_t stage = 0) {
  const std::size_t n = og.vertex_count();
  detail::require(coloring.assignment.size() == n && coloring.complete(),
                  "build_dimension needs a complete coloring");
  const auto len = static_cast<std::int64_t>(n);
  IntervalRep rep;
  rep.common_length = len;
  rep.label = {stage, j};
  rep.intervals.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto y = static_cast<std::int64_t>(v) + 1;
    if (coloring[v] == j) {
      rep.intervals[v] = {y + len, y + 2 * len};
      continue;
    }
    std::int64_t g = 0;
    for (Vertex w : og.graph().neighbors(v))
      if (coloring[w] == j) g = std::max<std::int64_t>(g, static_cast<std::int64_t>(w) + 1);
    rep.intervals[v] = {g, g + len};
  }
  return rep;
}

// All palette dimensions of one coloring in a single sweep from the last
// vertex down. Every interval starts as [0, n]; a vertex of color j moves to
// [y + n, y + 2n] in dimension j and pushes each not-yet-moved neighbor of
// another color to [y, y + n]. The sweep visits all neighbors: restricting it
// to earlier neighbors would leave a later neighbor at [0, n], disjoint from
// [y + n, y + 2n].
inline std::vector<IntervalRep> sweep_dimensions(const OrderedGraph& og, const Coloring& coloring,
                                                 std::size_t stage = 0) {
  const std::size_t n = og.vertex_count();
  const std::size_t a = coloring.palette_size;
  detail::require(coloring.assignment.size() == n && coloring.complete(),
                  "sweep needs a complete coloring");
  const auto len = static_cast<std::int64_t>(n);
  std::vector<IntervalRep> dims(a);
  for (std::size_t j = 0; j < a; ++j) {
    dims[j].common_length = len;
    dims[j].label = {stage, j};
    dims[j].intervals.assign(n, Interval{0, len});
  }
  for (Vertex v = static_cast<Vertex>(n); v-- > 0;) {
    const Color j = coloring[v];
    const auto y = static_cast<std::int64_t>(v) + 1;
    auto& f = dims[j].intervals;
    f[v] = {y + len, y + 2 * len};
    for (Vertex w : og.graph().neighbors(v))
      if (coloring[w] != j && f[w].l == 0) f[w] = {y, y + len};
  }
  return dims;
}

// One dimension, every interval [0, n]: the representation used when there
// is no non-edge to separate.
inline IntervalRep complete_dimension(std::size_t n) {
  const auto len = static_cast<std::int64_t>(n);
  IntervalRep rep;
  rep.common_length = len;
  rep.intervals.assign(n, Interval{0, len});
  return rep;
}

struct VerificationReport {
  std::vector<Edge> missing_edges;   // adjacent, but disjoint in some dimension
  std::vector<Edge> phantom_edges;   // non-adjacent, but overlapping everywhere
  struct LengthViolation {
    std::size_t dimension;
    Vertex vertex;
    std::int64_t length;
    std::int64_t expected;
  };
  std::vector<LengthViolation> length_violations;

  bool ok() const noexcept {
    return missing_edges.empty() && phantom_edges.empty() && length_violations.empty();
  }
};

inline VerificationReport verify_representation(const Graph& g, std::span<const IntervalRep> dims) {
  const std::size_t n = g.vertex_count();
  VerificationReport report;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    detail::require(dims[d].vertex_count() == n,
                    "dimension " + std::to_string(d) + " has " +
                        std::to_string(dims[d].vertex_count()) + " vertices, graph has " +
                        std::to_string(n));
    if (!dims[d].common_length) continue;
    for (Vertex v = 0; v < n; ++v) {
      const auto len = dims[d].intervals[v].length();
      if (len != *dims[d].common_length)
        report.length_violations.push_back({d, v, len, *dims[d].common_length});
    }
  }
  std::vector<std::uint8_t> row(n);
  for (Vertex u = 0; u < n; ++u) {
    std::fill(row.begin(), row.end(), 0);
    for (Vertex w : g.neighbors(u)) row[w] = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      bool all = true;
      for (const auto& dim : dims)
        if (!overlaps(dim.intervals[u], dim.intervals[v])) {
          all = false;
          break;
        }
      if (row[v] && !all) report.missing_edges.emplace_back(u, v);
      if (!row[v] && all) report.phantom_edges.emplace_back(u, v);
    }
  }
  return report;
}

inline VerificationReport verify_representation(const Graph& g, const CubeRepresentation& rep) {
  detail::require(rep.vertex_count() == g.vertex_count(), "representation vertex count differs from graph");
  return verify_representation(g, std::span<const IntervalRep>(rep.dims));
}

// Greedily drops dimensions (last first) whose non-edges all stay separated
// elsewhere. Needs a representation that already verifies against g.
inline void prune_dimensions(const Graph& g, CubeRepresentation& rep) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
  std::vector<std::size_t> separators(non_edges.size(), 0);
  auto separates = [&](const IntervalRep& dim, const Edge& e) {
    return !overlaps(dim.intervals[e.first], dim.intervals[e.second]);
  };
  for (const auto& dim : rep.dims)
    for (std::size_t i = 0; i < non_edges.size(); ++i) separators[i] += separates(dim, non_edges[i]);
  std::vector<bool> keep(rep.dims.size(), true);
  for (std::size_t d = rep.dims.size(); d-- > 0;) {
    if (std::count(keep.begin(), keep.end(), true) == 1) break;
    bool droppable = true;
    for (std::size_t i = 0; i < non_edges.size() && droppable; ++i)
      if (separates(rep.dims[d], non_edges[i]) && separators[i] < 2) droppable = false;
    if (!droppable) continue;
    keep[d] = false;
    for (std::size_t i = 0; i < non_edges.size(); ++i) separators[i] -= separates(rep.dims[d], non_edges[i]);
  }
  std::vector<IntervalRep> kept;
  for (std::size_t d = 0; d < rep.dims.size(); ++d)
    if (keep[d]) kept.push_back(std::move(rep.dims[d]));
  rep.dims = std::move(kept);
  rep.meta.pruned = true;
}

struct BuildOptions {
  BuildMode mode = BuildMode::deterministic;
  std::uint64_t seed = 0;
  bool prune = false;
  std::size_t max_draws = kDefaultMaxDraws;
};

// Written by construct_cub_rep when requested.
struct BuildTrace {
  DeterministicTrace deterministic;
  ColoringFamily family;
};

inline std::uint64_t dimension_bound(BuildMode mode, std::size_t n, std::size_t k) {
  if (mode == BuildMode::randomized) return (k + 2) * random_family_size(n);
  return 8 * std::max<std::size_t>(k, 1) * deterministic_stage_bound(n);
}

// Intervals live in ordered-vertex space; move them back to source ids.
inline IntervalRep to_source_ids(const OrderedGraph& og, const IntervalRep& ordered) {
  IntervalRep out = ordered;
  for (Vertex v = 0; v < og.vertex_count(); ++v)
    out.intervals[og.source_vertex(v)] = ordered.intervals[v];
  return out;
}

// End-to-end: degeneracy order, coloring family, one dimension per (coloring,
// color), then verification. Graphs without non-edges get complete_dimension.
inline CubeRepresentation construct_cub_rep(const Graph& g, const BuildOptions& opt = {},
                                            BuildTrace* trace = nullptr) {
  const std::size_t n = g.vertex_count();
  detail::require(n >= 1, "construct_cub_rep needs at least one vertex");
  detail::require(opt.mode != BuildMode::decomposition, "decomposition is built by the crossing pipeline");
  const OrderedGraph og(g);
  CubeRepresentation rep;
  rep.source_graph_hash = graph_digest(g);
  rep.meta.n = n;
  rep.meta.k = og.k();
  rep.meta.mode = opt.mode;
  rep.meta.seed = opt.mode == BuildMode::randomized ? opt.seed : 0;
  rep.meta.dimension_bound = dimension_bound(opt.mode, n, og.k());

  if (g.non_edge_count() == 0) {
    rep.meta.palette_size = opt.mode == BuildMode::randomized ? og.k() + 2 : 8 * og.k_prime();
    rep.dims.push_back(complete_dimension(n));
    return rep;
  }

  ColoringFamily fam;
  if (opt.mode == BuildMode::deterministic) {
    fam = deterministic_coloring_family(og, trace ? &trace->deterministic : nullptr);
  } else {
    fam = random_coloring_family(og, opt.seed, opt.max_draws);
  }
  rep.meta.stages = fam.colorings.size();
  rep.meta.palette_size = fam.palette_size;
  rep.meta.attempts = fam.attempts;
  for (std::size_t i = 0; i < fam.colorings.size(); ++i)
    for (auto& dim : sweep_dimensions(og, fam.colorings[i], i + 1))
      rep.dims.push_back(to_source_ids(og, dim));
  if (trace) trace->family = std::move(fam);

  const auto report = verify_representation(g, rep);
  detail::ensure(report.ok(), "constructed representation failed verification");
  detail::ensure(rep.dims.size() <= rep.meta.dimension_bound, "dimension bound exceeded");
  if (opt.prune) prune_dimensions(g, rep);
  return rep;
}

// Every interval must reach n or 2n (n the common length); only then does a
// new vertex at [n, 2n] meet all of them.
inline bool touches_anchor_points(const IntervalRep& dim) {
  if (!dim.common_length) return false;
  const std::int64_t len = *dim.common_length;
  return std::all_of(dim.intervals.begin(), dim.intervals.end(),
                     [len](const Interval& f) { return f.contains(len) || f.contains(2 * len); });
}

// Appends `count` universal vertices (ids n..n+count-1), each at [n, 2n].
inline CubeRepresentation extend_with_universal(const CubeRepresentation& rep, std::size_t count) {
  for (std::size_t d = 0; d < rep.dims.size(); ++d)
    detail::require(touches_anchor_points(rep.dims[d]),
                    "dimension " + std::to_string(d) + " has an interval missing both n and 2n");
  CubeRepresentation out = rep;
  if (count == 0) return out;
  for (auto& dim : out.dims) {
    const std::int64_t len = *dim.common_length;
    dim.intervals.insert(dim.intervals.end(), count, Interval{len, 2 * len});
  }
  out.meta.n += count;
  out.meta.universal_added += count;
  return out;
}

// G plus `count` new vertices adjacent to everything.
inline Graph with_universal_vertices(const Graph& g, std::size_t count) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> e = g.edges();
  for (std::size_t i = 0; i < count; ++i) {
    const auto u = static_cast<Vertex>(n + i);
    for (Vertex v = 0; v < u; ++v) e.emplace_back(v, u);
  }
  return Graph(n + count, e);
}

}  // namespace cubrep
