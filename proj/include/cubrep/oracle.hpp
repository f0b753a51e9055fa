#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cubrep/errors.hpp"
#include "cubrep/graph.hpp"
#include "cubrep/interval.hpp"

namespace cubrep {

// Pairs (u, v) overlapping in every dimension.
inline Graph intersection_graph(std::span<const IntervalRep> dims) {
  detail::require(!dims.empty(), "intersection of zero interval graphs is not defined here");
  const std::size_t n = dims.front().vertex_count();
  for (const auto& d : dims) detail::require(d.vertex_count() == n, "dimensions disagree on vertex count");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (std::all_of(dims.begin(), dims.end(),
                      [&](const IntervalRep& d) { return overlaps(d.intervals[u], d.intervals[v]); }))
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

namespace oracle {

// ---------------------------------------------------------------------------
// Vertex orders.
//
// interval:      an order with  u < v < w, uw in E  =>  uv in E
// unit interval: an order with  u < v < w, uw in E  =>  uv, vw in E
// (left-endpoint orders of interval / unit interval representations).

enum class OrderKind { interval, unit_interval };

namespace detail {

inline bool order_admissible(const Graph& g, std::span<const Vertex> order, OrderKind kind) {
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 2; k < n; ++k) {
      if (!g.has_edge(order[i], order[k])) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!g.has_edge(order[i], order[j])) return false;
        if (kind == OrderKind::unit_interval && !g.has_edge(order[j], order[k])) return false;
      }
    }
  return true;
}

// Can `w` go right after `prefix` without breaking any triple ending at w?
inline bool extends(const Graph& g, std::span<const Vertex> prefix, Vertex w, OrderKind kind) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (!g.has_edge(prefix[i], w)) continue;
    for (std::size_t j = i + 1; j < prefix.size(); ++j) {
      if (!g.has_edge(prefix[i], prefix[j])) return false;
      if (kind == OrderKind::unit_interval && !g.has_edge(prefix[j], w)) return false;
    }
  }
  return true;
}

inline bool extend_order(const Graph& g, std::vector<Vertex>& prefix, std::vector<bool>& used,
                         OrderKind kind) {
  if (prefix.size() == g.vertex_count()) return true;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (used[w] || !extends(g, prefix, w, kind)) continue;
    used[w] = true;
    prefix.push_back(w);
    if (extend_order(g, prefix, used, kind)) return true;
    prefix.pop_back();
    used[w] = false;
  }
  return false;
}

}  // namespace detail

// Every permutation; the reference route for tiny graphs.
inline std::optional<std::vector<Vertex>> find_order_exhaustive(const Graph& g, OrderKind kind) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  do {
    if (detail::order_admissible(g, order, kind)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

// Backtracking over prefixes; each triple is checked when its last vertex is
// placed, so dead prefixes are cut immediately.
inline std::optional<std::vector<Vertex>> find_order(const Graph& g, OrderKind kind) {
  std::vector<Vertex> prefix;
  std::vector<bool> used(g.vertex_count(), false);
  prefix.reserve(g.vertex_count());
  if (detail::extend_order(g, prefix, used, kind)) return prefix;
  return std::nullopt;
}

// Interval witness from an admissible interval order: the vertex at position i
// spans [i, last position among itself and its later neighbors].
inline IntervalRep interval_witness(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  IntervalRep rep;
  rep.intervals.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t reach = pos[v];
    for (Vertex w : g.neighbors(v)) reach = std::max(reach, pos[w]);
    rep.intervals[v] = {static_cast<std::int64_t>(pos[v]), static_cast<std::int64_t>(reach)};
  }
  return rep;
}

// Unit witness from an admissible unit interval order. Left endpoints solve
//   x_j - x_i <= L      (i < j adjacent)
//   x_j - x_i >= L + 1  (i < j non-adjacent)
//   x_j - x_i >= 0      (i < j)
// by Bellman-Ford, doubling L until feasible.
inline std::optional<IntervalRep> unit_interval_witness(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return IntervalRep{{}, 0, {}};
  struct Constraint {
    std::size_t from, to;
    std::int64_t weight;  // x_to - x_from <= weight
  };
  for (std::int64_t len = std::max<std::int64_t>(1, static_cast<std::int64_t>(n));
       len <= static_cast<std::int64_t>(4 * n * n + 4); len *= 2) {
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        cs.push_back({j, i, 0});  // x_i - x_j <= 0
        if (g.has_edge(order[i], order[j]))
          cs.push_back({i, j, len});
        else
          cs.push_back({j, i, -(len + 1)});
      }
    std::vector<std::int64_t> x(n, 0);
    bool changed = true;
    for (std::size_t round = 0; round <= n && changed; ++round) {
      changed = false;
      for (const auto& c : cs)
        if (x[c.from] + c.weight < x[c.to]) {
          x[c.to] = x[c.from] + c.weight;
          changed = true;
        }
    }
    if (changed) continue;  // negative cycle: infeasible for this length
    const std::int64_t shift = -*std::min_element(x.begin(), x.end());
    IntervalRep rep;
    rep.common_length = len;
    rep.intervals.resize(n);
    for (std::size_t i = 0; i < n; ++i) rep.intervals[order[i]] = {x[i] + shift, x[i] + shift + len};
    return rep;
  }
  return std::nullopt;
}

struct UnitIntervalResult {
  bool is_unit_interval = false;
  std::optional<IntervalRep> witness;
};

inline UnitIntervalResult is_unit_interval_graph(const Graph& g) {
  auto order = g.vertex_count() <= 5 ? find_order_exhaustive(g, OrderKind::unit_interval)
                                     : find_order(g, OrderKind::unit_interval);
  if (!order) return {};
  auto witness = unit_interval_witness(g, *order);
  ::cubrep::detail::ensure(witness.has_value(), "unit interval order without a length witness");
  ::cubrep::detail::ensure(intersection_graph(std::span<const IntervalRep>(&*witness, 1)) == g,
                           "unit interval witness does not reproduce the graph");
  return {true, std::move(witness)};
}

inline bool is_interval_graph(const Graph& g) {
  return (g.vertex_count() <= 5 ? find_order_exhaustive(g, OrderKind::interval)
                                : find_order(g, OrderKind::interval))
      .has_value();
}

// ---------------------------------------------------------------------------
// Tiny graphs as edge bitmasks. Bit p of the mask is the p-th pair in
// (0,1), (0,2), ..., (0,n-1), (1,2), ... order.

inline constexpr std::size_t kMaskVertexLimit = 7;

inline std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

inline std::uint32_t pair_index(std::size_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  // pairs before row u, then offset inside the row
  return static_cast<std::uint32_t>(u * n - u * (u + 1) / 2 + (v - u - 1));
}

inline Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (mask >> pair_index(n, u, v) & 1U) e.emplace_back(u, v);
  return Graph(n, e);
}

inline std::uint32_t mask_of(const Graph& g) {
  ::cubrep::detail::require(g.vertex_count() <= kMaskVertexLimit, "graph too large for a mask");
  std::uint32_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= 1U << pair_index(g.vertex_count(), u, v);
  return mask;
}

// Memoized order recognition over masks, one table per (n, kind).
inline bool mask_admits_order(std::size_t n, std::uint32_t mask, OrderKind kind) {
  thread_local std::array<std::array<std::unordered_map<std::uint32_t, bool>, 2>, kMaskVertexLimit + 1>
      memo;
  auto& table = memo[n][kind == OrderKind::unit_interval ? 1 : 0];
  if (auto it = table.find(mask); it != table.end()) return it->second;
  const bool result = find_order(graph_from_mask(n, mask), kind).has_value();
  table.emplace(mask, result);
  return result;
}

// Smallest number of candidate masks whose union covers `universe`.
inline std::size_t min_cover(std::uint32_t universe, std::vector<std::uint32_t> sets) {
  if (universe == 0) return 0;
  // drop sets contained in another
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint32_t> maximal;
  for (auto s : sets) {
    s &= universe;
    if (s == 0) continue;
    bool dominated = false;
    for (auto t : sets)
      if ((t & universe) != s && ((t & universe) | s) == (t & universe)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());

  auto search = [&](auto&& self, std::uint32_t covered, std::size_t budget) -> bool {
    if (covered == universe) return true;
    if (budget == 0) return false;
    const std::uint32_t missing = universe & ~covered;
    const std::uint32_t pick = missing & (~missing + 1);  // lowest uncovered item
    for (auto s : maximal)
      if ((s & pick) && self(self, covered | s, budget - 1)) return true;
    return false;
  };
  for (std::size_t d = 1; d <= static_cast<std::size_t>(std::popcount(universe)); ++d)
    if (search(search, 0, d)) return d;
  throw ::cubrep::InvariantViolation("cover search failed; single-non-edge supergraphs should cover");
}

struct OracleLimits {
  std::size_t max_vertices = 5;
};

namespace detail {

// Minimum number of supergraphs admitting `kind` whose intersection is g.
// Complete graphs report 1.
inline std::size_t exact_dimension(const Graph& g, OrderKind kind, const OracleLimits& limits) {
  const std::size_t n = g.vertex_count();
  ::cubrep::detail::require(n <= limits.max_vertices && n <= kMaskVertexLimit,
                            "exact search is capped at " + std::to_string(limits.max_vertices) +
                                " vertices (graph has " + std::to_string(n) + ")");
  ::cubrep::detail::require(n >= 1, "exact search needs at least one vertex");
  const std::uint32_t base = mask_of(g);
  std::vector<std::uint32_t> non_edge_bits;
  for (std::uint32_t p = 0; p < pair_count(n); ++p)
    if (!(base >> p & 1U)) non_edge_bits.push_back(1U << p);
  if (non_edge_bits.empty()) return 1;

  // Candidate: add any subset of the non-edges; it separates the rest.
  std::vector<std::uint32_t> separated;
  const std::uint32_t all_non_edges = std::accumulate(non_edge_bits.begin(), non_edge_bits.end(), 0U,
                                                      [](std::uint32_t a, std::uint32_t b) { return a | b; });
  for (std::uint32_t subset = 0; subset < (1U << non_edge_bits.size()); ++subset) {
    std::uint32_t added = 0;
    for (std::size_t i = 0; i < non_edge_bits.size(); ++i)
      if (subset >> i & 1U) added |= non_edge_bits[i];
    if (added == all_non_edges) continue;  // complete graph separates nothing
    if (mask_admits_order(n, base | added, kind)) separated.push_back(all_non_edges & ~added);
  }
  return min_cover(all_non_edges, std::move(separated));
}

}  // namespace detail

inline std::size_t exact_cubicity(const Graph& g, const OracleLimits& limits = {}) {
  return detail::exact_dimension(g, OrderKind::unit_interval, limits);
}

inline std::size_t exact_boxicity(const Graph& g, const OracleLimits& limits = {}) {
  return detail::exact_dimension(g, OrderKind::interval, limits);
}

// ---------------------------------------------------------------------------
// All graphs on n <= 5 vertices up to isomorphism.

struct CatalogEntry {
  std::size_t n = 0;
  std::uint32_t mask = 0;  // canonical: smallest mask over relabelings
  bool is_interval = false;
  bool is_unit_interval = false;

  Graph graph() const { return graph_from_mask(n, mask); }
};

inline std::uint32_t canonical_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint32_t best = mask;
  do {
    std::uint32_t m = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (mask >> pair_index(n, u, v) & 1U) m |= 1U << pair_index(n, perm[u], perm[v]);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

class TinyGraphCatalog {
 public:
  static constexpr std::size_t kMaxVertices = 5;

  TinyGraphCatalog() {
    for (std::size_t n = 1; n <= kMaxVertices; ++n) {
      std::vector<bool> seen(std::size_t{1} << pair_count(n), false);
      for (std::uint32_t mask = 0; mask < (1U << pair_count(n)); ++mask) {
        const std::uint32_t canon = canonical_mask(n, mask);
        if (seen[canon]) continue;
        seen[canon] = true;
        entries_.push_back({n, canon, mask_admits_order(n, canon, OrderKind::interval),
                            mask_admits_order(n, canon, OrderKind::unit_interval)});
      }
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return std::tie(a.n, a.mask) < std::tie(b.n, b.mask); });
  }

  std::span<const CatalogEntry> entries() const noexcept { return entries_; }

  std::vector<CatalogEntry> of_size(std::size_t n) const {
    std::vector<CatalogEntry> out;
    for (const auto& e : entries_)
      if (e.n == n) out.push_back(e);
    return out;
  }

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace oracle
}  // namespace cubrep
