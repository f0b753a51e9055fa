#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace cubrep {

inline constexpr const char* kRngName = "mt19937_64/splitmix64-v1";

// SplitMix64 finalizer; derive(master, i) gives independent child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// std::mt19937_64 output is fixed by the standard; the bounded draws below are
// written out so results do not depend on the library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // True with probability num/den exactly.
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    if (num >= den) return true;
    if (num == 0) return false;
    return below(den) < num;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cubrep
