#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cubrep {

// Closed integer interval [l, r].
struct Interval {
  std::int64_t l = 0;
  std::int64_t r = 0;

  std::int64_t length() const noexcept { return r - l; }
  bool contains(std::int64_t p) const noexcept { return l <= p && p <= r; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Touching endpoints intersect.
constexpr bool overlaps(const Interval& a, const Interval& b) noexcept {
  return std::max(a.l, b.l) <= std::min(a.r, b.r);
}

// Where a dimension came from: which coloring and which color class.
struct DimensionLabel {
  std::size_t stage = 0;
  std::size_t color = 0;

  friend bool operator==(const DimensionLabel&, const DimensionLabel&) = default;
};

// One interval per vertex. Unit (cube) dimensions carry their common length;
// box dimensions built by the crossing surgery leave it empty.
struct IntervalRep {
  std::vector<Interval> intervals;
  std::optional<std::int64_t> common_length;
  DimensionLabel label;

  std::size_t vertex_count() const noexcept { return intervals.size(); }
  const Interval& operator[](std::size_t v) const { return intervals.at(v); }

  friend bool operator==(const IntervalRep&, const IntervalRep&) = default;
};

}  // namespace cubrep
