#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "cubrep/cube_builder.hpp"
#include "cubrep/oracle.hpp"

using namespace cubrep;

namespace {

// The sweep restricted to earlier neighbors, as a reference for the variant
// that loses edges.
std::vector<IntervalRep> backward_only_sweep(const OrderedGraph& og, const Coloring& c) {
  const std::size_t n = og.vertex_count();
  const auto len = static_cast<std::int64_t>(n);
  std::vector<IntervalRep> dims(c.palette_size);
  for (auto& d : dims) {
    d.common_length = len;
    d.intervals.assign(n, Interval{0, len});
  }
  for (Vertex v = static_cast<Vertex>(n); v-- > 0;) {
    const Color j = c[v];
    const auto y = static_cast<std::int64_t>(v) + 1;
    auto& f = dims[j].intervals;
    f[v] = {y + len, y + 2 * len};
    for (Vertex w : og.backward(v))
      if (c[w] != j && f[w].l == 0) f[w] = {y, y + len};
  }
  return dims;
}

// Pairwise overlap scan, independent of verify_representation.
Graph overlap_graph(const std::vector<IntervalRep>& dims, std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool all = true;
      for (const auto& d : dims) {
        const auto& a = d.intervals[u];
        const auto& b = d.intervals[v];
        if (a.r < b.l || b.r < a.l) all = false;
      }
      if (all) e.emplace_back(u, v);
    }
  return Graph(n, e);
}

Coloring random_coloring(std::size_t n, std::size_t a, std::uint64_t seed) {
  Rng rng(seed);
  Coloring c{std::vector<Color>(n), a};
  for (auto& x : c.assignment) x = static_cast<Color>(rng.below(a));
  return c;
}

}  // namespace

TEST(BuildDimension, AllOneColorIsAClique) {
  const OrderedGraph og(path_graph(5));
  const Coloring c{std::vector<Color>(5, 2), 3};
  const auto dim = build_dimension(og, c, 2);
  for (Vertex v = 0; v < 5; ++v) {
    EXPECT_EQ(dim.intervals[v], (Interval{v + 1 + 5, v + 1 + 10}));
    EXPECT_TRUE(dim.intervals[v].contains(10));
  }
}

TEST(BuildDimension, AbsentColorGivesCompleteDimension) {
  const OrderedGraph og(path_graph(5));
  const Coloring c{std::vector<Color>(5, 0), 3};
  const auto dim = build_dimension(og, c, 1);
  for (const auto& f : dim.intervals) EXPECT_EQ(f, (Interval{0, 5}));
}

TEST(BuildDimension, SupergraphOnHandInstance) {
  const Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
  const OrderedGraph og(g);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = random_coloring(4, 3, seed);
    for (Color j = 0; j < 3; ++j) {
      const auto dim = build_dimension(og, c, j);
      for (auto [u, v] : og.graph().edges()) EXPECT_TRUE(overlaps(dim.intervals[u], dim.intervals[v]));
      for (const auto& f : dim.intervals) {
        EXPECT_EQ(f.length(), 4);
        EXPECT_GE(f.l, 0);
        EXPECT_LE(f.r, 12);
      }
    }
  }
}

TEST(Sweep, AgreesWithFormulaOnCorpus) {
  for (const auto& [name, g] : corpus::full()) {
    const OrderedGraph og(g);
    const std::size_t a = og.k() + 2;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto c = random_coloring(g.vertex_count(), a, seed);
      const auto swept = sweep_dimensions(og, c, 1);
      for (Color j = 0; j < a; ++j) ASSERT_EQ(swept[j], build_dimension(og, c, j, 1)) << name;
    }
  }
}

TEST(Sweep, BackwardOnlyVariantLosesAnEdgeOnP2) {
  const OrderedGraph og(path_graph(2));
  const Coloring c{{1, 0}, 2};
  const auto literal = backward_only_sweep(og, c);
  EXPECT_EQ(overlap_graph(literal, 2).edge_count(), 0u);
  const auto fixed = sweep_dimensions(og, c);
  EXPECT_EQ(overlap_graph(fixed, 2).edge_count(), 1u);
}

TEST(Verify, ReportsMissingPhantomAndLength) {
  const Graph c4 = cycle_graph(4);
  auto rep = construct_cub_rep(c4);
  EXPECT_TRUE(verify_representation(c4, rep).ok());

  auto shortened = rep;
  shortened.dims[0].intervals[0].r -= 1;
  const auto r1 = verify_representation(c4, shortened);
  ASSERT_EQ(r1.length_violations.size(), 1u);
  EXPECT_EQ(r1.length_violations[0].length, 3);

  // every separating dimension of one non-edge removed
  auto one_short = rep;
  std::erase_if(one_short.dims, [](const IntervalRep& d) { return !overlaps(d.intervals[0], d.intervals[2]); });
  const auto r2 = verify_representation(c4, one_short);
  EXPECT_NE(std::find(r2.phantom_edges.begin(), r2.phantom_edges.end(), Edge{0, 2}), r2.phantom_edges.end());
  EXPECT_TRUE(r2.missing_edges.empty());

  EXPECT_THROW(verify_representation(cycle_graph(5), rep), InvalidArgument);
}

TEST(Verify, MatchesOverlapOracle) {
  for (const auto& [name, g] : corpus::all_labeled(4)) {
    const auto rep = construct_cub_rep(g);
    EXPECT_EQ(overlap_graph(rep.dims, g.vertex_count()), g) << name;
  }
}

TEST(Build, CompleteGraphAndSingleVertex) {
  for (std::size_t n : {1, 2, 5}) {
    const auto rep = construct_cub_rep(complete_graph(n));
    ASSERT_EQ(rep.dimension(), 1u);
    for (const auto& f : rep.dims[0].intervals) EXPECT_EQ(f, (Interval{0, static_cast<std::int64_t>(n)}));
  }
  BuildOptions opt;
  opt.mode = BuildMode::randomized;
  EXPECT_EQ(construct_cub_rep(Graph(1), opt).dimension(), 1u);
  EXPECT_THROW(construct_cub_rep(Graph(0)), InvalidArgument);
}

TEST(Build, P4DeterministicBound) {
  const Graph p4 = path_graph(4);
  const auto rep = construct_cub_rep(p4);
  EXPECT_EQ(rep.meta.dimension_bound, 40u);
  EXPECT_LE(rep.dimension(), 40u);
  EXPECT_EQ(cubrep::intersection_graph(rep.dims), p4);
}

TEST(Build, DeterministicCorpusInvariants) {
  for (const auto& [name, g] : corpus::full()) {
    const auto rep = construct_cub_rep(g);
    const std::size_t n = g.vertex_count();
    ASSERT_TRUE(verify_representation(g, rep).ok()) << name;
    EXPECT_LE(rep.dimension(), 8 * std::max<std::size_t>(rep.meta.k, 1) * deterministic_stage_bound(n)) << name;
    for (const auto& d : rep.dims) {
      ASSERT_EQ(d.common_length, static_cast<std::int64_t>(n));
      for (const auto& f : d.intervals) {
        EXPECT_EQ(f.length(), static_cast<std::int64_t>(n));
        EXPECT_GE(f.l, 0);
        EXPECT_LE(f.r, 3 * static_cast<std::int64_t>(n));
      }
      for (auto [u, v] : g.edges()) ASSERT_TRUE(overlaps(d.intervals[u], d.intervals[v])) << name;
    }
  }
}

TEST(Build, RandomizedBoundAndReproducibility) {
  for (const auto& [name, g] : corpus::large()) {
    BuildOptions opt;
    opt.mode = BuildMode::randomized;
    opt.seed = 99;
    const auto a = construct_cub_rep(g, opt);
    EXPECT_TRUE(verify_representation(g, a).ok()) << name;
    if (g.non_edge_count() > 0) {
      EXPECT_EQ(a.dimension(), (a.meta.k + 2) * random_family_size(g.vertex_count())) << name;
    }
    EXPECT_EQ(a, construct_cub_rep(g, opt)) << name;
  }
}

TEST(Build, PruningKeepsValidity) {
  for (const auto& [name, g] : corpus::all_labeled(5)) {
    BuildOptions opt;
    opt.prune = true;
    const auto rep = construct_cub_rep(g, opt);
    EXPECT_EQ(rep.meta.pruned, g.non_edge_count() > 0) << name;
    EXPECT_TRUE(verify_representation(g, rep).ok()) << name;
    EXPECT_GE(rep.dimension(), oracle::exact_cubicity(g)) << name;
  }
}

TEST(Build, ScalingPreservesIntersection) {
  const Graph g = corpus::random_tree(15, 4);
  const auto rep = construct_cub_rep(g);
  auto scaled = rep.dims;
  for (auto& d : scaled) {
    for (auto& f : d.intervals) f = {3 * f.l, 3 * f.r};
    d.common_length = *d.common_length * 3;
  }
  EXPECT_TRUE(verify_representation(g, scaled).ok());
}

TEST(Universal, Examples) {
  const auto k3 = construct_cub_rep(complete_graph(3));
  EXPECT_EQ(extend_with_universal(k3, 0), k3);
  const auto k4 = extend_with_universal(k3, 1);
  EXPECT_TRUE(verify_representation(complete_graph(4), k4).ok());

  const Graph p4 = path_graph(4);
  const auto ext = extend_with_universal(construct_cub_rep(p4), 2);
  std::vector<Edge> direct = p4.edges();
  for (Vertex u : {4u, 5u})
    for (Vertex v = 0; v < u; ++v) direct.emplace_back(v, u);
  EXPECT_TRUE(verify_representation(Graph(6, direct), ext).ok());
  EXPECT_EQ(with_universal_vertices(p4, 2), Graph(6, direct));
}

TEST(Universal, RejectsRepsWithoutAnchorTouch) {
  auto rep = construct_cub_rep(path_graph(4));
  rep.dims[0].intervals[0] = {-10, -6};
  EXPECT_THROW(extend_with_universal(rep, 1), InvalidArgument);
}

TEST(Universal, EveryConstructedDimensionTouchesAnchors) {
  for (const auto& [name, g] : corpus::large()) {
    BuildOptions opt;
    opt.mode = BuildMode::randomized;
    opt.seed = 5;
    for (const auto& rep : {construct_cub_rep(g), construct_cub_rep(g, opt)})
      for (const auto& d : rep.dims) ASSERT_TRUE(touches_anchor_points(d)) << name;
  }
}
