// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "cubrep/cubrep.hpp"

using namespace cubrep;

namespace {

// Pinned tolerances.
constexpr double kCorpusSeconds = 60.0;
constexpr double kDegeneracySeconds = 30.0;
constexpr std::size_t kMinCorpus = 500;
const Rational kMaxMeanAttempts(2);
const Rational kMinPassFraction(95, 100);
const Rational kMaxWidth(1, 1000000000);

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

const std::vector<corpus::Named>& the_corpus() {
  static const auto c = corpus::full();
  return c;
}

// Independent pairwise overlap scan.
Graph overlap_graph(std::span<const IntervalRep> dims, std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool all = true;
      for (const auto& d : dims) {
        const auto& a = d.intervals[u];
        const auto& b = d.intervals[v];
        if (a.r < b.l || b.r < a.l) {
          all = false;
          break;
        }
      }
      if (all) e.emplace_back(u, v);
    }
  return Graph(n, e);
}

std::string ratio(const Rational& r) { return to_string(numerator(r)) + "/" + to_string(denominator(r)); }

Outcome criterion1() {
  Outcome o;
  const auto& c = the_corpus();
  if (c.size() < kMinCorpus) o.fail("corpus too small");
  Clock clock;
  for (const auto& [name, g] : c) {
    const auto rep = construct_cub_rep(g);
    const std::size_t n = g.vertex_count();
    if (!verify_representation(g, rep).ok() || overlap_graph(rep.dims, n) != g) o.fail(name + ": does not verify");
    for (const auto& d : rep.dims)
      for (const auto& f : d.intervals)
        if (f.length() != static_cast<std::int64_t>(n)) o.fail(name + ": interval length differs from n");
    const std::size_t bound = 8 * std::max<std::size_t>(rep.meta.k, 1) * (ceil_coef_log(Rational(242, 100), n) + 1);
    if (rep.dimension() > bound) o.fail(name + ": dimension above bound");
  }
  const double s = clock.seconds();
  if (s >= kCorpusSeconds) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(c.size()) + " graphs, " + std::to_string(s) + " s";
  return o;
}

// Weak support of (x, y) under col: color of y against the forward neighbors
// of x beyond y.
bool weak_ok(const OrderedGraph& og, const std::vector<Color>& col, Vertex x, Vertex y, Color cy) {
  for (Vertex z : og.forward(x))
    if (z > y && col[z] == cy) return false;
  return true;
}

Outcome criterion2() {
  Outcome o;
  std::size_t steps = 0;
  for (const auto& [name, g] : the_corpus()) {
    const OrderedGraph og(g);
    DeterministicTrace trace;
    deterministic_coloring_family(og, &trace, true);
    for (const auto& st : trace.stages) {
      const auto& col = st.coloring.assignment;
      for (const auto& step : st.steps) {
        ++steps;
        const Vertex y = step.vertex;
        std::size_t x = 0, yy = 0, z = 0;
        for (Vertex b : st.bnn_at_entry[y]) x += weak_ok(og, col, b, y, step.color);
        for (Vertex f : st.fnn_at_entry[y]) {
          if (!weak_ok(og, col, y, f, col[f])) continue;
          ++z;
          yy += col[f] != step.color;
        }
        const std::size_t bnn = st.bnn_at_entry[y].size();
        if (x != step.x || yy != step.y || z != step.z || bnn != step.bnn) o.fail(name + ": recorded sets differ");
        if (4 * x < 3 * bnn || 4 * yy < 3 * z) o.fail(name + ": color choice violates the 3/4 rule");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(steps) + " color choices, 0 violations";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t stages = 0;
  for (const auto& [name, g] : the_corpus()) {
    const OrderedGraph og(g);
    DeterministicTrace trace;
    deterministic_coloring_family(og, &trace);
    const std::size_t cap = ceil_coef_log(Rational(242, 100), g.vertex_count()) + 1;
    if (trace.stages.size() > cap) o.fail(name + ": stage cap exceeded");
    for (const auto& st : trace.stages) {
      ++stages;
      if (16 * st.mbar_after > 7 * st.mbar_before) o.fail(name + ": shrinkage below 7/16");
    }
    if (!trace.stages.empty() && trace.stages.back().mbar_after != 0) o.fail(name + ": non-edges left over");
  }
  if (o.ok) o.detail = std::to_string(stages) + " stages";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const std::size_t runs = 200;
  std::size_t attempts = 0;
  Rng pick(4);
  for (std::size_t i = 0; i < runs; ++i) {
    const std::size_t n = 20 + pick.below(181);
    const std::uint64_t c = 1 + pick.below(8);
    const Graph g = gen_gnp(n, Rational(c, n - 1), derive_seed(400, i));
    BuildOptions opt;
    opt.mode = BuildMode::randomized;
    opt.seed = derive_seed(401, i);
    BuildTrace trace;
    const auto rep = construct_cub_rep(g, opt, &trace);
    const std::size_t k = degeneracy_order(g).k;
    const std::size_t b = random_family_size(n);
    if (b != static_cast<std::size_t>(std::ceil(2 * std::exp(1.0) * std::log(static_cast<double>(n)))))
      o.fail("family size formula");
    if (trace.family.colorings.size() != b) o.fail("family size differs from ceil(2e ln n)");
    if (rep.meta.palette_size != k + 2 || trace.family.palette_size != k + 2) o.fail("palette differs from k+2");
    if (!verify_representation(g, rep).ok() || overlap_graph(rep.dims, n) != g) o.fail("randomized rep fails");
    attempts += rep.meta.attempts;
  }
  const Rational mean(attempts, runs);
  if (mean > kMaxMeanAttempts) o.fail("mean attempts " + ratio(mean));
  if (o.ok) o.detail = "mean attempts " + ratio(mean);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto large = corpus::large();
  std::size_t done = 0;
  for (std::size_t i = 0; i < large.size() && done < 50; i += std::max<std::size_t>(large.size() / 50, 1), ++done) {
    const auto& [name, g] = large[i];
    const std::size_t n = g.vertex_count(), extra = 1 + done % 3;
    std::vector<Edge> direct = g.edges();
    for (Vertex u = static_cast<Vertex>(n); u < n + extra; ++u)
      for (Vertex v = 0; v < u; ++v) direct.emplace_back(v, u);
    const Graph gp(n + extra, direct);
    BuildOptions opt;
    opt.mode = done % 2 ? BuildMode::randomized : BuildMode::deterministic;
    opt.seed = done;
    const auto ext = extend_with_universal(construct_cub_rep(g, opt), extra);
    if (!verify_representation(gp, ext).ok() || overlap_graph(ext.dims, n + extra) != gp) o.fail(name + ": extension fails");
  }
  if (done < 50) o.fail("fewer than 50 graphs");
  if (o.ok) o.detail = std::to_string(done) + " extensions";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& [name, g] : corpus::all_labeled(5)) {
    const std::size_t n = g.vertex_count();
    const auto box = oracle::exact_boxicity(g), cub = oracle::exact_cubicity(g);
    if (box > cub) o.fail(name + ": box > cub");
    // a single vertex is a 1-box and a 1-cube by convention
    if (box > std::max<std::size_t>(n / 2, 1)) o.fail(name + ": box above n/2");
    if (cub > std::max<std::size_t>(2 * n / 3, 1)) o.fail(name + ": cub above 2n/3");
    if (construct_cub_rep(g).dimension() < cub) o.fail(name + ": builder below cub");
  }
  if (oracle::exact_boxicity(complete_bipartite(2, 2)) != 2) o.fail("box(K22) != 2");
  if (oracle::exact_cubicity(complete_bipartite(3, 3), oracle::OracleLimits{6}) != 4) o.fail("cub(K33) != 4");
  if (o.ok) o.detail = "1099 graphs, box(K22)=2, cub(K33)=4";
  return o;
}

VertexPartition random_partition(std::size_t n, Rng& rng) {
  std::vector<Vertex> b;
  for (Vertex v = 0; v < n; ++v)
    if (rng.below(3) == 0) b.push_back(v);
  return VertexPartition::from_b(n, b);
}

Graph saturated(const Graph& g, const VertexPartition& p) {
  std::vector<Edge> e = g.edges();
  for (std::size_t i = 0; i < p.part_b.size(); ++i)
    for (std::size_t j = i + 1; j < p.part_b.size(); ++j) e.emplace_back(p.part_b[i], p.part_b[j]);
  return Graph(g.vertex_count(), e);  // duplicates are merged by Graph
}

Outcome criterion7() {
  Outcome o;
  Rng rng(7);
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng.below(39);
    const Graph g = gen_gnp(n, Rational(1 + rng.below(5), 8), derive_seed(700, i));
    const auto p = random_partition(n, rng);
    std::vector<Edge> stable;
    for (auto [u, v] : g.edges())
      if (!(p.in_b(u) && p.in_b(v))) stable.emplace_back(u, v);
    const auto s_dims = construct_cub_rep(Graph(n, stable)).dims;
    const auto cb = double_representation(g, p, s_dims);
    const std::string tag = "instance " + std::to_string(i);
    if (cb.size() != 2 * s_dims.size()) o.fail(tag + ": doubling is not exactly 2x");
    if (overlap_graph(cb, n) != saturated(g, p)) o.fail(tag + ": doubled dims miss C_B");
    std::vector<Edge> gp = g.edges();
    for (Vertex a : p.part_a)
      for (Vertex v = 0; v < n; ++v)
        if (v != a) gp.emplace_back(std::min(a, v), std::max(a, v));
    const auto g_dims = construct_cub_rep(Graph(n, gp)).dims;
    const auto all = compose_decomposition(g, p, cb, g_dims);
    if (all.size() != 2 * s_dims.size() + g_dims.size()) o.fail(tag + ": composition is not 2r+s");
    if (overlap_graph(all, n) != g) o.fail(tag + ": composition misses G");
  }
  if (o.ok) o.detail = "100 instances";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto pt = pach_toth_lower_bound(100, 750);
  if (!pt.hypothesis_holds || pt.value != Rational(1250)) o.fail("pach_toth(100, 750) != 1250");
  const auto d16 = degeneracy_bound_from_crossing(16);
  if (!d16.exact() || d16.lo != Rational(28)) o.fail("degeneracy bound(16) != 28");
  Rng rng(8);
  std::size_t checks = 0;
  while (checks < 10000) {
    const std::uint64_t t1 = rng.below(1000000), t2 = t1 + rng.below(1000000);
    const std::uint64_t n1 = 1 + rng.below(100000), n2 = n1 + rng.below(100000);
    const std::vector<Enclosure> all{dav_bound_from_crossing(n1, t1), degeneracy_bound_from_crossing(t1),
                                     box_bound_from_crossing(t1), cub_bound_from_crossing(n1, t1)};
    for (const auto& e : all)
      if (e.width() > kMaxWidth || e.lo > e.hi) o.fail("enclosure too wide");
    auto mono = [&](const Enclosure& a, const Enclosure& b) {
      ++checks;
      if (a.lo > b.hi) o.fail("monotonicity violated");
    };
    mono(degeneracy_bound_from_crossing(t1), degeneracy_bound_from_crossing(t2));
    mono(box_bound_from_crossing(t1), box_bound_from_crossing(t2));
    mono(cub_bound_from_crossing(n1, t1), cub_bound_from_crossing(n1, t2));
    mono(cub_bound_from_crossing(n1, t1), cub_bound_from_crossing(n2, t1));
    mono(dav_bound_from_crossing(n1, t1), dav_bound_from_crossing(n1, t2));
    const std::uint64_t m1 = 8 * n1 + rng.below(100000), m2 = m1 + rng.below(100000);
    mono(Enclosure::point(pach_toth_lower_bound(n1, m1).value), Enclosure::point(pach_toth_lower_bound(n1, m2).value));
  }
  if (o.ok) o.detail = std::to_string(checks) + " monotonicity checks";
  return o;
}

Outcome pass_fraction(const ExperimentResult& r, const std::string& label) {
  Outcome o;
  const auto& s = r.summary.at(0);
  if (s.fraction() < kMinPassFraction) o.fail(label + ": " + std::to_string(s.passed) + "/" + std::to_string(s.total));
  o.detail = label + " " + std::to_string(s.passed) + "/" + std::to_string(s.total);
  return o;
}

Outcome merge(const std::vector<Outcome>& parts) {
  Outcome o;
  std::string d;
  for (const auto& p : parts) {
    d += (d.empty() ? "" : ", ") + p.detail;
    o.ok = o.ok && p.ok;
  }
  o.detail = d;
  return o;
}

Outcome criterion9() {
  Clock clock;
  std::vector<Outcome> parts;
  for (int c : {1, 2, 4})
    parts.push_back(pass_fraction(degeneracy_experiment(ExperimentSpec::degeneracy(200, Rational(c), 100, 900 + c)),
                                  "c=" + std::to_string(c)));
  Outcome o = merge(parts);
  const double s = clock.seconds();
  if (s >= kDegeneracySeconds) o.ok = false;
  o.detail += ", " + std::to_string(s) + " s";
  return o;
}

Outcome criterion10() {
  std::vector<Outcome> parts;
  for (std::uint64_t m : {100, 200, 400})
    parts.push_back(pass_fraction(cubicity_experiment(ExperimentSpec::cubicity(100, m, 50, 1000 + m)),
                                  "d_av=" + std::to_string(2 * m / 100)));
  return merge(parts);
}

// Every emitted document, produced from scratch.
std::vector<std::string> documents() {
  std::vector<std::string> out;
  const Graph g = gen_gnp(60, Rational(1, 12), 11);
  BuildOptions rand;
  rand.mode = BuildMode::randomized;
  rand.seed = 77;
  BuildOptions pruned;
  pruned.prune = true;
  out.push_back(io::emit_graph(g, io::GraphFormat::edge_list));
  out.push_back(io::emit_representation(construct_cub_rep(g)));
  out.push_back(io::emit_representation(construct_cub_rep(g, rand), true));
  out.push_back(io::emit_representation(construct_cub_rep(g, pruned)));
  out.push_back(io::dump(io::bound_report_json(bound_report(1000, 5000, 321))));
  const auto e = g.edges();
  CrossingData cd{{{e[0], e[e.size() / 2]}, {e[1], e.back()}}};
  out.push_back(io::dump(io::crossing_pipeline_json(g, crossing_pipeline(g, cd))));
  auto spec = ExperimentSpec::cubicity(50, 75, 5, 3);
  out.push_back(io::dump(io::experiment_result_json(run_experiment(spec))));
  spec.threads = 3;
  out.push_back(io::dump(io::experiment_result_json(run_experiment(spec))));
  out.push_back(io::dump(io::experiment_result_json(run_experiment(ExperimentSpec::degeneracy(100, Rational(3), 10, 5)))));
  return out;
}

Outcome criterion11() {
  Outcome o;
  const auto a = documents(), b = documents();
  if (a != b) o.fail("documents differ between runs");
  if (a[6] != a[7]) o.fail("thread count changes the experiment document");
  if (o.ok) o.detail = std::to_string(a.size()) + " documents identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"deterministic corpus build", criterion1},  {"per-vertex 3/4 rule", criterion2},
      {"stage shrinkage and cap", criterion3},     {"randomized family", criterion4},
      {"universal extension", criterion5},         {"oracle consistency", criterion6},
      {"doubling and composition", criterion7},    {"bound formulas", criterion8},
      {"degeneracy at desk scale", criterion9},    {"cubicity at desk scale", criterion10},
      {"reproducibility", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::printf("%s criterion %zu (%s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
