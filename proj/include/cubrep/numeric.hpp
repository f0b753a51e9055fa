#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cubrep/errors.hpp"

namespace cubrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 100 decimal digits; only used to take ceilings/floors of transcendental
// quantities, never persisted.
using Wide = boost::multiprecision::cpp_bin_float_100;

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  detail::require(den != 0, "zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline Wide to_wide(const Rational& r) {
  return Wide(boost::multiprecision::numerator(r)) / Wide(boost::multiprecision::denominator(r));
}

namespace detail {

inline std::int64_t to_int64(const Wide& w) {
  return static_cast<std::int64_t>(boost::multiprecision::round(w).convert_to<long long>());
}

}  // namespace detail

// ceil(coef * ln n) for n >= 1. coef*ln n is never an integer for n >= 2, so
// 100 digits settle the ceiling.
inline std::size_t ceil_coef_log(const Rational& coef, std::size_t n) {
  detail::require(n >= 1, "log of zero");
  if (n == 1) return 0;
  const Wide v = to_wide(coef) * boost::multiprecision::log(Wide(n));
  return static_cast<std::size_t>(boost::multiprecision::ceil(v).convert_to<long long>());
}

// ceil(2.42 ln n) + 1: the deterministic stage cap.
inline std::size_t deterministic_stage_bound(std::size_t n) {
  return ceil_coef_log(rational(242, 100), n) + 1;
}

// ceil(2e ln n): colorings per randomized family.
inline std::size_t random_family_size(std::size_t n) {
  detail::require(n >= 1, "log of zero");
  if (n == 1) return 0;
  const Wide v = 2 * boost::multiprecision::exp(Wide(1)) * boost::multiprecision::log(Wide(n));
  return static_cast<std::size_t>(boost::multiprecision::ceil(v).convert_to<long long>());
}

// floor(e * r) for rational r >= 0.
inline BigInt floor_e_times(const Rational& r) {
  detail::require(r >= 0, "negative argument");
  const Wide v = boost::multiprecision::exp(Wide(1)) * to_wide(r);
  return BigInt(boost::multiprecision::floor(v));
}

// Integer floor of the p-th root of a non-negative integer.
inline BigInt floor_root(const BigInt& x, unsigned p) {
  detail::require(x >= 0 && p >= 1, "bad root argument");
  if (x < 2 || p == 1) return x;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (static_cast<unsigned>(boost::multiprecision::msb(x)) / p + 1);
  while (lo < hi) {  // largest r with r^p <= x
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, p) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// A closed rational interval [lo, hi] containing a real value.
struct Enclosure {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }

  friend Enclosure operator+(Enclosure a, const Rational& c) { return {a.lo + c, a.hi + c}; }
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  // Scaling by a non-negative constant.
  friend Enclosure operator*(const Rational& c, const Enclosure& a) {
    detail::require(c >= 0, "enclosure scaling must be non-negative");
    return {c * a.lo, c * a.hi};
  }

  static Enclosure point(const Rational& v) { return {v, v}; }
};

// Enclosure of x^(1/p) with width at most 1/resolution; exact when x is a
// perfect p-th power of a multiple of 1/resolution.
inline Enclosure root_enclosure(const Rational& x, unsigned p, const BigInt& resolution) {
  detail::require(x >= 0, "root of negative value");
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const BigInt scaled_num = num * boost::multiprecision::pow(resolution, p);
  const BigInt floor_scaled = scaled_num / den;
  const BigInt r = floor_root(floor_scaled, p);
  const Rational lo(r, resolution);
  if (boost::multiprecision::pow(r, p) * den == scaled_num) return Enclosure::point(lo);
  return {lo, Rational(r + 1, resolution)};
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace cubrep
