#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hyperns {

// Exact unbounded natural; term evaluation never truncates, so 2^2048 and
// friends must be representable as plain values.
using BigNat = boost::multiprecision::cpp_int;

// Exact rational, canonical form (reduced, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

inline BigNat bignat_pow2(std::uint64_t e) {
  BigNat r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

// 2^k as a rational, k may be negative.
inline Rational rat_pow2(std::int64_t k) {
  if (k >= 0) return Rational(bignat_pow2(static_cast<std::uint64_t>(k)));
  return Rational(1, bignat_pow2(static_cast<std::uint64_t>(-k)));
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string rat_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace hyperns
