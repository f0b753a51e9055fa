#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubrep/cube_builder.hpp"
#include "cubrep/errors.hpp"
#include "cubrep/graph.hpp"
#include "cubrep/numeric.hpp"
#include "cubrep/rng.hpp"

namespace cubrep {

namespace detail {

inline std::uint64_t to_u64(const BigInt& v, const char* what) {
  require(v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()), what);
  return static_cast<std::uint64_t>(v);
}

// Pair index i in [0, C(n,2)) -> (u, v), u < v, row-major over u.
inline Edge pair_from_index(std::size_t n, std::uint64_t i) {
  Vertex u = 0;
  std::uint64_t row = n - 1;
  while (i >= row) {
    i -= row;
    ++u;
    --row;
  }
  return {u, static_cast<Vertex>(u + 1 + i)};
}

}  // namespace detail

// Each pair present independently with probability p (exact rational).
inline Graph gen_gnp(std::size_t n, const Rational& p, std::uint64_t seed) {
  detail::require(p >= 0 && p <= 1, "p must lie in [0, 1]");
  const auto num = detail::to_u64(boost::multiprecision::numerator(p), "p numerator too large");
  const auto den = detail::to_u64(boost::multiprecision::denominator(p), "p denominator too large");
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(num, den)) e.emplace_back(u, v);
  return Graph(n, e);
}

// Uniform m-edge graph: the first m slots of a partial Fisher-Yates shuffle of
// the pair indices, kept sparse.
inline Graph gen_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  detail::require(m <= pairs, "m exceeds C(n, 2)");
  Rng rng(seed);
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  auto at = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<Edge> e;
  e.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + rng.below(pairs - i);
    const std::uint64_t pick = at(j);
    moved[j] = at(i);
    e.push_back(detail::pair_from_index(n, pick));
  }
  return Graph(n, e);
}

enum class ModelKind { gnp, gnm };
enum class ExperimentKind { degeneracy, cubicity };

inline const char* to_string(ModelKind m) { return m == ModelKind::gnp ? "gnp" : "gnm"; }
inline const char* to_string(ExperimentKind k) {
  return k == ExperimentKind::degeneracy ? "degeneracy" : "cubicity";
}

inline constexpr const char* kDegeneracyCheck = "degeneracy_threshold";
inline constexpr const char* kCubDimensionCheck = "cub_dimension_threshold";

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::degeneracy;
  ModelKind model = ModelKind::gnp;
  std::size_t n = 0;
  Rational p;              // gnp
  std::uint64_t m = 0;     // gnm
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::vector<std::string> checks;  // empty: the kind's default check
  unsigned threads = 1;    // never affects the result

  // p = c / (n - 1)
  static ExperimentSpec degeneracy(std::size_t n, const Rational& c, std::size_t trials, std::uint64_t seed) {
    detail::require(n >= 2, "degeneracy experiment needs n >= 2");
    ExperimentSpec s;
    s.kind = ExperimentKind::degeneracy;
    s.model = ModelKind::gnp;
    s.n = n;
    s.p = c / Rational(n - 1);
    s.trials = trials;
    s.master_seed = seed;
    return s;
  }

  static ExperimentSpec cubicity(std::size_t n, std::uint64_t m, std::size_t trials, std::uint64_t seed) {
    ExperimentSpec s;
    s.kind = ExperimentKind::cubicity;
    s.model = ModelKind::gnm;
    s.n = n;
    s.m = m;
    s.trials = trials;
    s.master_seed = seed;
    return s;
  }

  Rational c() const { return p * Rational(n - 1); }
  Rational average_degree() const {
    return model == ModelKind::gnm ? Rational(2 * BigInt(m), BigInt(n)) : p * Rational(n - 1);
  }
  std::vector<std::string> effective_checks() const {
    if (!checks.empty()) return checks;
    return {kind == ExperimentKind::degeneracy ? kDegeneracyCheck : kCubDimensionCheck};
  }
};

inline void validate(const ExperimentSpec& s) {
  detail::require(s.n >= 1, "n must be at least 1");
  detail::require(s.trials >= 1, "trials must be at least 1");
  if (s.model == ModelKind::gnp) {
    detail::require(s.p >= 0 && s.p <= 1, "p must lie in [0, 1]");
  } else {
    detail::require(s.m <= static_cast<std::uint64_t>(s.n) * (s.n - 1) / 2, "m exceeds C(n, 2)");
  }
  if (s.kind == ExperimentKind::degeneracy) {
    detail::require(s.model == ModelKind::gnp, "degeneracy experiment samples G(n, p)");
    detail::require(s.n >= 2 && s.c() >= 1, "degeneracy experiment needs c = p(n-1) >= 1");
  } else {
    detail::require(s.model == ModelKind::gnm, "cubicity experiment samples G(n, m)");
    detail::require(2 * s.m >= s.n, "cubicity experiment needs 2m/n >= 1");
  }
  for (const auto& c : s.effective_checks())
    detail::require(c == kDegeneracyCheck || c == kCubDimensionCheck, "unknown check '" + c + "'");
  detail::require(s.kind == ExperimentKind::cubicity ||
                      std::find(s.checks.begin(), s.checks.end(), kCubDimensionCheck) == s.checks.end(),
                  "cub_dimension_threshold needs the cubicity experiment");
}

// floor(4 e c): the largest degeneracy with k <= 4ec.
inline std::uint64_t degeneracy_threshold(const Rational& c) {
  return detail::to_u64(floor_e_times(4 * c), "threshold overflow");
}

// floor((4 e d + 2) ceil(2e ln n)), d = 2m/n.
inline std::uint64_t cub_dimension_threshold(std::size_t n, const Rational& d) {
  const std::uint64_t b = random_family_size(n);
  return detail::to_u64(floor_e_times(4 * d * b) + 2 * BigInt(b), "threshold overflow");
}

struct CheckOutcome {
  std::string name;
  bool passed = false;
  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  std::size_t k = 0;
  std::optional<std::size_t> dims;
  std::optional<bool> verified;
  std::optional<std::size_t> attempts;
  std::vector<CheckOutcome> checks;
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct CheckSummary {
  std::string name;
  std::uint64_t threshold = 0;
  std::size_t passed = 0;
  std::size_t total = 0;
  Rational fraction() const { return total == 0 ? Rational(0) : Rational(passed, total); }
  friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<TrialRecord> trials;
  std::vector<CheckSummary> summary;
};

inline TrialRecord run_trial(const ExperimentSpec& s, std::size_t index) {
  TrialRecord r;
  r.index = index;
  r.seed = derive_seed(s.master_seed, index);
  const Graph g = s.model == ModelKind::gnp ? gen_gnp(s.n, s.p, r.seed) : gen_gnm(s.n, s.m, r.seed);
  r.edges = g.edge_count();
  r.k = degeneracy_order(g).k;
  if (s.kind == ExperimentKind::cubicity) {
    BuildOptions opt;
    opt.mode = BuildMode::randomized;
    opt.seed = derive_seed(r.seed, 1);
    const auto rep = construct_cub_rep(g, opt);
    r.dims = rep.dimension();
    r.verified = verify_representation(g, rep).ok();
    r.attempts = rep.meta.attempts;
  }
  for (const auto& name : s.effective_checks()) {
    bool ok = false;
    if (name == kDegeneracyCheck) {
      ok = r.k <= degeneracy_threshold(s.average_degree());
    } else {
      ok = *r.verified && *r.dims <= cub_dimension_threshold(s.n, s.average_degree());
    }
    r.checks.push_back({name, ok});
  }
  return r;
}

inline std::vector<CheckSummary> summarize(const ExperimentSpec& s, const std::vector<TrialRecord>& trials) {
  std::vector<CheckSummary> out;
  for (const auto& name : s.effective_checks()) {
    CheckSummary c;
    c.name = name;
    c.threshold = name == kDegeneracyCheck ? degeneracy_threshold(s.average_degree())
                                           : cub_dimension_threshold(s.n, s.average_degree());
    for (const auto& t : trials)
      for (const auto& o : t.checks)
        if (o.name == name) {
          ++c.total;
          c.passed += o.passed ? 1 : 0;
        }
    out.push_back(std::move(c));
  }
  return out;
}

// Trial i depends only on (master_seed, i); records land in index order.
inline ExperimentResult run_experiment(const ExperimentSpec& s) {
  validate(s);
  ExperimentResult res;
  res.spec = s;
  res.trials.resize(s.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(s.threads, static_cast<unsigned>(s.trials)));
  if (workers == 1) {
    for (std::size_t i = 0; i < s.trials; ++i) res.trials[i] = run_trial(s, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < s.trials;) res.trials[i] = run_trial(s, i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  res.summary = summarize(s, res.trials);
  return res;
}

inline ExperimentResult degeneracy_experiment(const ExperimentSpec& s) {
  detail::require(s.kind == ExperimentKind::degeneracy, "spec is not a degeneracy experiment");
  return run_experiment(s);
}

inline ExperimentResult cubicity_experiment(const ExperimentSpec& s) {
  detail::require(s.kind == ExperimentKind::cubicity, "spec is not a cubicity experiment");
  return run_experiment(s);
}

}  // namespace cubrep
