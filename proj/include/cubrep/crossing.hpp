#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubrep/cube_builder.hpp"
#include "cubrep/errors.hpp"
#include "cubrep/graph.hpp"
#include "cubrep/interval.hpp"
#include "cubrep/numeric.hpp"

namespace cubrep {

// Crossing pairs of a drawing, supplied by the caller.
struct CrossingData {
  std::vector<std::pair<Edge, Edge>> crossings;

  std::size_t t() const noexcept { return crossings.size(); }
};

struct VertexPartition {
  std::vector<Vertex> part_a;  // sorted
  std::vector<Vertex> part_b;  // sorted

  static VertexPartition from_b(std::size_t n, std::vector<Vertex> b) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    VertexPartition p;
    p.part_b = std::move(b);
    for (Vertex v = 0; v < n; ++v)
      if (!std::binary_search(p.part_b.begin(), p.part_b.end(), v)) p.part_a.push_back(v);
    return p;
  }

  bool in_b(Vertex v) const { return std::binary_search(part_b.begin(), part_b.end(), v); }
  std::size_t vertex_count() const noexcept { return part_a.size() + part_b.size(); }
};

// ---------------------------------------------------------------------------
// Bound formulas. Irrational values come back as rational enclosures of
// width at most 1e-9; perfect powers come back exact.

namespace detail {

inline const BigInt& root_resolution() {
  static const BigInt r = boost::multiprecision::pow(BigInt(10), 12);
  return r;
}

// log2(n) enclosure; exact for powers of two.
inline Enclosure log2_enclosure(std::size_t n) {
  require(n >= 1, "log2 of zero");
  if (std::has_single_bit(n)) return Enclosure::point(Rational(std::countr_zero(n)));
  const unsigned bits = 128;
  const Wide v = boost::multiprecision::log2(Wide(n));
  const BigInt scaled = static_cast<BigInt>(boost::multiprecision::floor(v * Wide(BigInt(1) << bits)));
  const BigInt unit = BigInt(1) << bits;
  return {Rational(scaled - 1, unit), Rational(scaled + 2, unit)};
}

}  // namespace detail

struct PachTothBound {
  Rational value;               // 0 when the hypothesis fails
  bool hypothesis_holds = false;  // m >= 7.5 n
};

// m^3 / (33.75 n^2) = 4 m^3 / (135 n^2), for m >= 7.5 n.
inline PachTothBound pach_toth_lower_bound(std::uint64_t n, std::uint64_t m) {
  detail::require(n >= 1, "pach_toth_lower_bound needs n >= 1");
  PachTothBound b;
  b.hypothesis_holds = 2 * m >= 15 * n;
  if (!b.hypothesis_holds) return b;
  const BigInt bm(m), bn(n);
  b.value = Rational(4 * bm * bm * bm, 135 * bn * bn);
  return b;
}

// 2 (33.75 t / n)^(1/3) + 15
inline Enclosure dav_bound_from_crossing(std::uint64_t n, std::uint64_t t) {
  detail::require(n >= 1, "dav bound needs n >= 1");
  const Rational inner(135 * BigInt(t), 4 * BigInt(n));
  return Rational(2) * root_enclosure(inner, 3, detail::root_resolution()) + Rational(15);
}

// 6.5 t^(1/4) + 15
inline Enclosure degeneracy_bound_from_crossing(std::uint64_t t) {
  return Rational(13, 2) * root_enclosure(Rational(t), 4, detail::root_resolution()) + Rational(15);
}

// ceil(ln 4t), t >= 1
inline std::size_t ceil_log_4t(std::uint64_t t) {
  detail::require(t >= 1, "ceil(ln 4t) needs t >= 1");
  return ceil_coef_log(Rational(1), 4 * t);
}

// 66 t^(1/4) ceil(ln 4t)^(3/4) + 6 for t >= 1; 3 for planar graphs (t = 0).
inline Enclosure box_bound_from_crossing(std::uint64_t t) {
  if (t == 0) return Enclosure::point(Rational(3));
  const BigInt q(ceil_log_4t(t));
  return Rational(66) * root_enclosure(Rational(BigInt(t) * q * q * q), 4, detail::root_resolution()) +
         Rational(6);
}

// 6 log2 n + (6.5 t^(1/4) + 17) ceil(2e ln 4t); the second term vanishes at t = 0.
inline Enclosure cub_bound_from_crossing(std::uint64_t n, std::uint64_t t) {
  Enclosure first = Rational(6) * detail::log2_enclosure(n);
  if (t == 0) return first;
  const Rational b(random_family_size(4 * t));
  const Enclosure with_17 = degeneracy_bound_from_crossing(t) + Rational(2);
  return first + b * with_17;
}

struct NamedBound {
  std::string name;
  std::string formula;
  Enclosure value;
  bool applicable = true;
};

struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  std::vector<NamedBound> bounds;
};

inline BoundReport bound_report(std::uint64_t n, std::uint64_t m, std::uint64_t t) {
  BoundReport r{n, m, t, {}};
  const auto pt = pach_toth_lower_bound(n, m);
  r.bounds.push_back({"crossing_lower_bound", "m^3/(33.75 n^2), needs m >= 7.5n",
                      Enclosure::point(pt.value), pt.hypothesis_holds});
  r.bounds.push_back({"average_degree_bound", "2 (33.75 t/n)^(1/3) + 15", dav_bound_from_crossing(n, t), true});
  r.bounds.push_back({"degeneracy_bound", "6.5 t^(1/4) + 15", degeneracy_bound_from_crossing(t), true});
  r.bounds.push_back({"boxicity_bound", t == 0 ? "3 (planar)" : "66 t^(1/4) ceil(ln 4t)^(3/4) + 6",
                      box_bound_from_crossing(t), true});
  r.bounds.push_back({"cubicity_bound", "6 log2 n + (6.5 t^(1/4) + 17) ceil(2e ln 4t)",
                      cub_bound_from_crossing(n, t), true});
  return r;
}

// ---------------------------------------------------------------------------
// Partition and surgeries.

struct CrossingPartitionResult {
  VertexPartition partition;
  std::vector<std::string> warnings;
};

// part_b: every endpoint of an edge that takes part in some crossing.
inline CrossingPartitionResult crossing_partition(const Graph& g, const CrossingData& cd) {
  CrossingPartitionResult out;
  std::vector<Vertex> b;
  for (std::size_t i = 0; i < cd.crossings.size(); ++i) {
    const auto& [e1, e2] = cd.crossings[i];
    for (const Edge& e : {e1, e2}) {
      detail::require(e.first < g.vertex_count() && e.second < g.vertex_count() && g.has_edge(e.first, e.second),
                      "crossing " + std::to_string(i + 1) + " names a pair that is not an edge");
      b.push_back(e.first);
      b.push_back(e.second);
    }
    if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first || e1.second == e2.second)
      out.warnings.push_back("crossing " + std::to_string(i + 1) + " joins edges with a common endpoint");
  }
  out.partition = VertexPartition::from_b(g.vertex_count(), std::move(b));
  detail::ensure(out.partition.part_b.size() <= 4 * cd.t(), "more than 4t crossing vertices");
  return out;
}

// S_B(G): part_b made independent.
inline Graph stabilize(const Graph& g, const VertexPartition& p) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (!(p.in_b(u) && p.in_b(v))) e.emplace_back(u, v);
  return Graph(g.vertex_count(), e);
}

// C_B(G): part_b made a clique.
inline Graph clique_saturate(const Graph& g, const VertexPartition& p) {
  std::vector<Edge> e = g.edges();
  for (std::size_t i = 0; i < p.part_b.size(); ++i)
    for (std::size_t j = i + 1; j < p.part_b.size(); ++j) e.emplace_back(p.part_b[i], p.part_b[j]);
  return Graph(g.vertex_count(), e);
}

// G': every part_a vertex made universal.
inline Graph universalize_a(const Graph& g, const VertexPartition& p) {
  std::vector<Edge> e = g.edges();
  for (Vertex a : p.part_a)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (v != a) e.emplace_back(std::min(a, v), std::max(a, v));
  return Graph(g.vertex_count(), e);
}

// From dimensions representing S_B(G), 2r dimensions representing C_B(G):
// the first r stretch every part_b interval left to the smallest part_b left
// end, the next r stretch them right to the largest part_b right end.
inline std::vector<IntervalRep> double_representation(const Graph& g, const VertexPartition& p,
                                                      std::span<const IntervalRep> s_b_dims) {
  detail::require(p.vertex_count() == g.vertex_count(), "partition does not cover the graph");
  detail::require(!s_b_dims.empty(), "double_representation needs at least one dimension");
  const auto in_report = verify_representation(stabilize(g, p), s_b_dims);
  detail::require(in_report.missing_edges.empty() && in_report.phantom_edges.empty(),
                  "input dimensions do not represent S_B(G)");
  std::vector<IntervalRep> left, right;
  for (const auto& dim : s_b_dims) {
    IntervalRep l = dim, r = dim;
    l.common_length.reset();
    r.common_length.reset();
    if (!p.part_b.empty()) {
      std::int64_t min_left = dim.intervals[p.part_b.front()].l;
      std::int64_t max_right = dim.intervals[p.part_b.front()].r;
      for (Vertex b : p.part_b) {
        min_left = std::min(min_left, dim.intervals[b].l);
        max_right = std::max(max_right, dim.intervals[b].r);
      }
      for (Vertex b : p.part_b) {
        l.intervals[b].l = min_left;
        r.intervals[b].r = max_right;
      }
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
  detail::ensure(verify_representation(clique_saturate(g, p), left).ok(),
                 "doubled dimensions do not represent C_B(G)");
  return left;
}

// G = C_B(G) ∩ G', so the two dimension lists concatenate into one for G.
inline std::vector<IntervalRep> compose_decomposition(const Graph& g, const VertexPartition& p,
                                                      std::span<const IntervalRep> c_b_dims,
                                                      std::span<const IntervalRep> g_prime_dims) {
  detail::require(verify_representation(clique_saturate(g, p), c_b_dims).ok(),
                  "first list does not represent C_B(G)");
  detail::require(verify_representation(universalize_a(g, p), g_prime_dims).ok(),
                  "second list does not represent G with part_a universal");
  std::vector<IntervalRep> out(c_b_dims.begin(), c_b_dims.end());
  out.insert(out.end(), g_prime_dims.begin(), g_prime_dims.end());
  detail::ensure(verify_representation(g, out).ok(), "composed dimensions do not represent G");
  return out;
}

// Moves dimensions over vertices 0..k-1 onto ids target[0..k-1] of an n-vertex graph.
inline IntervalRep remap_vertices(const IntervalRep& dim, std::span<const Vertex> target, std::size_t n) {
  detail::require(target.size() == dim.vertex_count(), "remap size mismatch");
  IntervalRep out = dim;
  out.intervals.assign(n, Interval{});
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < target.size(); ++i) {
    detail::require(target[i] < n && !hit[target[i]], "remap target is not injective");
    hit[target[i]] = true;
    out.intervals[target[i]] = dim.intervals[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bound trace: the min-degree split used by the boxicity argument on
// H = G[part_b], computed without building the planar representation.

struct BoundTrace {
  std::uint64_t t = 0;
  std::size_t h_vertices = 0;
  std::size_t h_edges = 0;
  std::size_t log_ceiling = 0;         // ceil(ln 4t)
  Enclosure threshold;                 // (33.75/3)^(1/4) (t / ceil(ln 4t))^(1/4)
  std::vector<std::size_t> peel_degrees;  // d_{H_i}(v_i) along the min-degree order
  std::optional<std::size_t> split;    // 1-based x; empty when no degree exceeds the threshold
  std::size_t tail_vertices = 0;       // |V_D|
  std::size_t tail_edges = 0;
  Rational tail_average_degree;        // d_av(H_D)
  Enclosure tail_vertex_bound;         // 48^(3/4) (33.75 t)^(1/4) ceil(ln 4t)^(3/4)
  Enclosure stable_part_bound;         // 24 (33.75/3)^(1/4) t^(1/4) ceil(ln 4t)^(3/4)
  Enclosure tail_box_bound;            // tail_vertex_bound / 2
  Enclosure total_bound;               // 66 t^(1/4) ceil(ln 4t)^(3/4) + 6
  bool tail_within_bound = true;       // |V_D| <= tail_vertex_bound
};

inline BoundTrace bound_trace(const Graph& h, std::uint64_t t) {
  BoundTrace tr;
  tr.t = t;
  tr.h_vertices = h.vertex_count();
  tr.h_edges = h.edge_count();
  const DegeneracyOrder d = degeneracy_order(h);
  for (Vertex v : d.order) tr.peel_degrees.push_back(forward_neighbors(h, d, v).size());
  tr.total_bound = box_bound_from_crossing(t);
  if (t == 0) return tr;

  const BigInt q(ceil_log_4t(t));
  tr.log_ceiling = static_cast<std::size_t>(q);
  const BigInt bt(t);
  const auto& res = detail::root_resolution();
  tr.threshold = root_enclosure(Rational(45 * bt, 4 * q), 4, res);
  tr.stable_part_bound = Rational(24) * root_enclosure(Rational(45 * bt * q * q * q, 4), 4, res);
  // 48^3 * 33.75 = 3732480
  tr.tail_vertex_bound = root_enclosure(Rational(3732480 * bt * q * q * q), 4, res);
  tr.tail_box_bound = Rational(1, 2) * tr.tail_vertex_bound;

  // d > threshold  <=>  4 q d^4 > 45 t
  for (std::size_t i = 0; i < tr.peel_degrees.size(); ++i) {
    const BigInt deg(tr.peel_degrees[i]);
    if (4 * q * deg * deg * deg * deg > 45 * bt) {
      tr.split = i + 1;
      break;
    }
  }
  if (!tr.split) return tr;
  std::vector<Vertex> tail(d.order.begin() + static_cast<std::ptrdiff_t>(*tr.split - 1), d.order.end());
  const Graph hd = induced_subgraph(h, tail);
  tr.tail_vertices = hd.vertex_count();
  tr.tail_edges = hd.edge_count();
  tr.tail_average_degree = Rational(2 * BigInt(hd.edge_count()), BigInt(hd.vertex_count()));
  tr.tail_within_bound = Rational(tr.tail_vertices) <= tr.tail_vertex_bound.hi;
  return tr;
}

// ---------------------------------------------------------------------------
// Whole decomposition of G from its crossing data.

struct CrossingPipelineResult {
  VertexPartition partition;
  std::vector<std::string> warnings;
  std::vector<IntervalRep> stable_dims;     // S_B(G), r dimensions
  std::vector<IntervalRep> clique_dims;     // C_B(G), 2r dimensions
  std::vector<IntervalRep> universal_dims;  // G', s dimensions
  std::vector<IntervalRep> dims;            // G, 2r + s dimensions
  BoundTrace trace;
};

// S_B(G) goes through construct_cub_rep in place of a planar box
// representation, so the achieved dimension exceeds the theorem's constant.
inline CrossingPipelineResult crossing_pipeline(const Graph& g, const CrossingData& cd) {
  detail::require(g.vertex_count() >= 1, "crossing pipeline needs at least one vertex");
  CrossingPipelineResult out;
  auto part = crossing_partition(g, cd);
  out.partition = std::move(part.partition);
  out.warnings = std::move(part.warnings);
  const auto& p = out.partition;

  out.stable_dims = construct_cub_rep(stabilize(g, p)).dims;
  out.clique_dims = double_representation(g, p, out.stable_dims);

  const Graph h = induced_subgraph(g, p.part_b);
  if (p.part_b.empty()) {
    out.universal_dims.push_back(complete_dimension(g.vertex_count()));
  } else {
    const auto extended = extend_with_universal(construct_cub_rep(h), p.part_a.size());
    std::vector<Vertex> target(p.part_b);
    target.insert(target.end(), p.part_a.begin(), p.part_a.end());
    for (const auto& dim : extended.dims) out.universal_dims.push_back(remap_vertices(dim, target, g.vertex_count()));
  }
  out.dims = compose_decomposition(g, p, out.clique_dims, out.universal_dims);
  out.trace = bound_trace(h, cd.t());
  return out;
}

}  // namespace cubrep
