#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cubrep/errors.hpp"
#include "cubrep/graph.hpp"
#include "cubrep/numeric.hpp"
#include "cubrep/rng.hpp"

namespace cubrep {

using Color = std::uint32_t;

// Marks a vertex not yet reached; differs from every palette color.
inline constexpr Color kUncolored = std::numeric_limits<Color>::max();

// Vertex -> color in [0, palette_size), not necessarily proper.
struct Coloring {
  std::vector<Color> assignment;
  std::size_t palette_size = 0;

  static Coloring uncolored(std::size_t n, std::size_t palette) {
    return Coloring{std::vector<Color>(n, kUncolored), palette};
  }

  Color operator[](Vertex v) const { return assignment.at(v); }
  bool is_colored(Vertex v) const { return assignment.at(v) != kUncolored; }

  bool complete() const {
    return std::all_of(assignment.begin(), assignment.end(),
                       [this](Color c) { return c < palette_size; });
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class Provenance { deterministic, randomized };

struct ColoringFamily {
  std::vector<Coloring> colorings;
  std::size_t palette_size = 0;
  Provenance provenance = Provenance::deterministic;
  std::uint64_t seed = 0;     // randomized only
  std::size_t attempts = 0;   // randomized only: draws until acceptance
};

// The anchor's upper vertex must differ in color from every other member.
// Uncolored members never collide.
inline bool favorably_colored(const SupportSet& s, const Coloring& c) {
  detail::require(s.upper < c.assignment.size(), "anchor outside coloring");
  detail::require(c.is_colored(s.upper), "anchor vertex is uncolored");
  const Color anchor = c[s.upper];
  for (Vertex w : s.members)
    if (w != s.upper && c[w] == anchor) return false;
  return true;
}

namespace detail {

// Strong support of (x, y), x < y in an OrderedGraph: forward neighbors of x
// past y, plus x, against the color of y.
inline bool strong_favorable(const OrderedGraph& og, const Coloring& c, Vertex x, Vertex y) {
  const Color cy = c[y];
  if (c[x] == cy) return false;
  for (Vertex z : og.forward(x))
    if (z > y && c[z] == cy) return false;
  return true;
}

inline bool weak_favorable(const OrderedGraph& og, const Coloring& c, Vertex x, Vertex y) {
  const Color cy = c[y];
  for (Vertex z : og.forward(x))
    if (z > y && c[z] == cy) return false;
  return true;
}

}  // namespace detail

// Dense 0/1 matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  bool get(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c) { bits_[r * cols_ + c] = 1; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Per-vertex record of one color choice, kept for auditing.
struct VertexStep {
  Vertex vertex = 0;
  Color color = 0;
  std::size_t bnn = 0;  // |BNN_i[v]|
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
};

// Bookkeeping for the deterministic coloring over an OrderedGraph.
//   bnn[v]: earlier non-neighbors u with (u, v) not yet done
//   fnn[v]: later non-neighbors w with (v, w) not yet done
//   fnc[w][j]: some colored forward neighbor of w has color j
//   hope[w][z]: weak support of (w, z) favorably colored in the current stage
//   done[w][z]: strong support of (w, z) favorably colored in the current stage
struct NonEdgeState {
  std::vector<std::vector<Vertex>> bnn;
  std::vector<std::vector<Vertex>> fnn;
  std::size_t mbar = 0;
  std::size_t palette_size = 0;
  BitMatrix fnc;
  BitMatrix hope;
  BitMatrix done;

  // Written by construct_coloring, consumed by prune_state.
  std::vector<std::vector<Vertex>> y_sets;
  std::vector<std::vector<Vertex>> w_sets;
  std::vector<VertexStep> steps;

  std::size_t vertex_count() const noexcept { return bnn.size(); }

  static NonEdgeState initial(const OrderedGraph& og, std::size_t palette_size) {
    const std::size_t n = og.vertex_count();
    NonEdgeState s;
    s.bnn.resize(n);
    s.fnn.resize(n);
    s.palette_size = palette_size;
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z)
        if (!og.adjacent(y, z)) {
          s.fnn[y].push_back(z);
          s.bnn[z].push_back(y);
        }
    s.recount();
    s.reset_matrices();
    return s;
  }

  void recount() {
    mbar = 0;
    for (const auto& f : fnn) mbar += f.size();
  }

  void reset_matrices() {
    const std::size_t n = vertex_count();
    fnc = BitMatrix(n, palette_size);
    hope = BitMatrix(n, n);
    done = BitMatrix(n, n);
    y_sets.assign(n, {});
    w_sets.assign(n, {});
    steps.clear();
  }
};

struct CandidateSets {
  std::vector<Vertex> x;  // BNN members whose weak support is favorable
  std::vector<Vertex> y;  // FNN members whose strong support is favorable
  std::vector<Vertex> z;  // FNN members whose weak support is favorable (y ⊆ z)
};

// Candidate sets for giving vertex y color c, given that y+1..n-1 are colored
// in `partial`. Reads only fnc/hope, which encode the partial coloring.
inline CandidateSets compute_candidate_sets(const NonEdgeState& state, const Coloring& partial,
                                            Vertex y, Color c) {
  detail::require(y < state.vertex_count(), "vertex out of range");
  detail::require(c < state.palette_size, "color outside palette");
  CandidateSets out;
  for (Vertex x : state.bnn[y])
    if (!state.fnc.get(x, c)) out.x.push_back(x);
  for (Vertex z : state.fnn[y]) {
    if (!state.hope.get(y, z)) continue;
    out.z.push_back(z);
    if (partial[z] != c) out.y.push_back(z);
  }
  return out;
}

// Called after each vertex is colored, with the updated state.
using StepObserver = std::function<void(const NonEdgeState&, const Coloring&, Vertex)>;

// Colors the vertices from last to first. Each vertex takes the first color
// (ascending) with |X| >= 3/4 |BNN| and |Y| >= 3/4 |Z|. A palette of at least
// 8k colors always admits one; failing to find it is an invariant violation.
inline Coloring construct_coloring(NonEdgeState& state, const OrderedGraph& og,
                                   std::size_t stage_index, const StepObserver& observer = {}) {
  const std::size_t n = og.vertex_count();
  const std::size_t a = state.palette_size;
  detail::require(state.vertex_count() == n, "state does not match graph");
  detail::require(a >= 8 * og.k_prime(), "palette smaller than 8k'");
  state.reset_matrices();
  Coloring coloring = Coloring::uncolored(n, a);

  for (Vertex y = static_cast<Vertex>(n); y-- > 0;) {
    const std::size_t bnn_size = state.bnn[y].size();
    bool chosen = false;
    for (Color c = 0; c < a && !chosen; ++c) {
      CandidateSets sets = compute_candidate_sets(state, coloring, y, c);
      if (4 * sets.x.size() < 3 * bnn_size || 4 * sets.y.size() < 3 * sets.z.size()) continue;
      chosen = true;
      coloring.assignment[y] = c;
      for (Vertex x : og.backward(y)) state.fnc.set(x, c);
      for (Vertex x : sets.x) state.hope.set(x, y);
      for (Vertex z : sets.y) state.done.set(y, z);
      state.steps.push_back({y, c, bnn_size, sets.x.size(), sets.y.size(), sets.z.size()});
      state.y_sets[y] = std::move(sets.y);
    }
    detail::ensure(chosen, "stage " + std::to_string(stage_index) + ": no qualifying color for vertex " +
                               std::to_string(y));
    if (observer) observer(state, coloring, y);
  }

  for (Vertex y = 0; y < n; ++y) {
    auto& w = state.w_sets[y];
    w.clear();
    for (Vertex x : state.bnn[y])
      if (state.done.get(x, y)) w.push_back(x);
  }
  return coloring;
}

// Drops the non-edges finished by `coloring` and checks the 7/16 shrinkage.
inline NonEdgeState prune_state(const NonEdgeState& state, const Coloring& coloring) {
  const std::size_t n = state.vertex_count();
  detail::require(coloring.assignment.size() == n && coloring.complete(),
                  "pruning needs a complete coloring");
  NonEdgeState next;
  next.palette_size = state.palette_size;
  next.bnn.resize(n);
  next.fnn.resize(n);
  std::size_t removed_back = 0;
  for (Vertex y = 0; y < n; ++y) {
    const auto& w = state.w_sets[y];
    const auto& ys = state.y_sets[y];
    for (Vertex x : state.bnn[y])
      if (!std::binary_search(w.begin(), w.end(), x)) next.bnn[y].push_back(x);
    for (Vertex z : state.fnn[y])
      if (!std::binary_search(ys.begin(), ys.end(), z)) next.fnn[y].push_back(z);
    removed_back += w.size();
  }
  next.recount();
  std::size_t back_total = 0;
  for (const auto& b : next.bnn) back_total += b.size();
  detail::ensure(back_total == next.mbar && removed_back == state.mbar - next.mbar,
                 "backward and forward non-edge sets diverged");
  detail::ensure(16 * next.mbar <= 7 * state.mbar, "non-edge count shrank by less than 7/16");
  next.reset_matrices();
  return next;
}

// One deterministic stage, as recorded by the driver.
struct StageRecord {
  std::size_t mbar_before = 0;
  std::size_t mbar_after = 0;
  Coloring coloring;
  std::vector<VertexStep> steps;
  // Set only when the driver is asked for full traces.
  std::vector<std::vector<Vertex>> bnn_at_entry;
  std::vector<std::vector<Vertex>> fnn_at_entry;
};

struct DeterministicTrace {
  std::vector<StageRecord> stages;
};

// Repeats construct_coloring/prune_state until every non-edge is done.
// Stops after ceil(2.42 ln n) + 1 stages at most.
inline ColoringFamily deterministic_coloring_family(const OrderedGraph& og,
                                                    DeterministicTrace* trace = nullptr,
                                                    bool keep_sets = false) {
  const std::size_t n = og.vertex_count();
  ColoringFamily fam;
  fam.palette_size = 8 * og.k_prime();
  fam.provenance = Provenance::deterministic;
  NonEdgeState state = NonEdgeState::initial(og, fam.palette_size);
  const std::size_t cap = n >= 1 ? deterministic_stage_bound(n) : 0;
  while (state.mbar > 0) {
    detail::ensure(fam.colorings.size() < cap, "deterministic driver exceeded its stage cap");
    StageRecord record;
    record.mbar_before = state.mbar;
    if (keep_sets) {
      record.bnn_at_entry = state.bnn;
      record.fnn_at_entry = state.fnn;
    }
    Coloring c = construct_coloring(state, og, fam.colorings.size() + 1);
    NonEdgeState next = prune_state(state, c);
    record.mbar_after = next.mbar;
    if (trace) {
      record.coloring = c;
      record.steps = state.steps;
      trace->stages.push_back(std::move(record));
    }
    fam.colorings.push_back(std::move(c));
    state = std::move(next);
  }
  return fam;
}

// Non-edges (x, y), x < y, whose strong support is favorable in no member.
inline std::vector<Edge> check_family(const OrderedGraph& og, const ColoringFamily& fam) {
  const std::size_t n = og.vertex_count();
  for (const auto& c : fam.colorings)
    detail::require(c.assignment.size() == n && c.complete(), "family member is not complete");
  std::vector<Edge> uncovered;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (og.adjacent(x, y)) continue;
      const bool covered = std::any_of(fam.colorings.begin(), fam.colorings.end(),
                                       [&](const Coloring& c) { return detail::strong_favorable(og, c, x, y); });
      if (!covered) uncovered.emplace_back(x, y);
    }
  return uncovered;
}

inline constexpr std::size_t kDefaultMaxDraws = 64;

// ceil(2e ln n) uniform colorings from k+2 colors, redrawn with the next
// derived seed until the family covers every non-edge.
inline ColoringFamily random_coloring_family(const OrderedGraph& og, std::uint64_t seed,
                                             std::size_t max_draws = kDefaultMaxDraws) {
  const std::size_t n = og.vertex_count();
  detail::require(n >= 2, "randomized family needs at least two vertices");
  ColoringFamily fam;
  fam.palette_size = og.k() + 2;
  fam.provenance = Provenance::randomized;
  fam.seed = seed;
  const std::size_t b = random_family_size(n);
  std::size_t last_uncovered = 0;
  for (std::size_t attempt = 0; attempt < max_draws; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    fam.colorings.assign(b, Coloring::uncolored(n, fam.palette_size));
    for (auto& c : fam.colorings)
      for (auto& color : c.assignment) color = static_cast<Color>(rng.below(fam.palette_size));
    auto uncovered = check_family(og, fam);
    if (uncovered.empty()) {
      fam.attempts = attempt + 1;
      return fam;
    }
    last_uncovered = uncovered.size();
  }
  throw SearchExhausted("random coloring family: " + std::to_string(max_draws) +
                        " draws failed (last draw left " + std::to_string(last_uncovered) +
                        " non-edges uncovered)");
}

}  // namespace cubrep
