#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals, plus the handful of floor/ceil helpers the bound arithmetic
// needs. Counting bounds like 2^(ell+1) * 2n * vol(n, d-1) overflow 64 bits
// even at toy scale, so everything countable is a BigInt.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nwlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when an exhaustive-enumeration guard refuses the requested size.
// The CLI maps this to exit code 2 (vs 1 for plain validation errors).
struct GuardRefusal : std::runtime_error {
  explicit GuardRefusal(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt acc = 1;
  while (exp > 0) {
    if (exp & 1) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

inline std::size_t bit_length(const BigInt& v) {
  if (v <= 0) return 0;
  return boost::multiprecision::msb(v) + 1;
}

// ceil(log2 v) for v >= 1.
inline std::size_t ceil_log2(const BigInt& v) {
  if (v < 1) throw std::domain_error("ceil_log2: argument must be >= 1");
  if (v == 1) return 0;
  return bit_length(v - 1);
}

inline BigInt rat_floor(const BigRat& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);  // always > 0
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

inline BigInt rat_ceil(const BigRat& q) { return -rat_floor(-q); }

inline bool rat_is_integer(const BigRat& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// floor(base^(a/b)) for base >= 1, b >= 1: the largest t with t^b <= base^a.
// Exact; used for size floors like 2^(alpha^4 d / 5) and ell = n^epsilon.
inline BigInt floor_pow(const BigInt& base, const BigInt& a, const BigInt& b) {
  if (base < 1 || b < 1 || a < 0) throw std::domain_error("floor_pow: need base>=1, a>=0, b>=1");
  if (base == 1 || a == 0) return 1;
  const auto ae = static_cast<std::uint64_t>(a);
  const auto be = static_cast<std::uint64_t>(b);
  const BigInt target = ipow(base, ae);
  // Bracket by the integer part of the exponent: 2^k <= t <= 2^(k+1) would be
  // too coarse for general bases, so bracket with integer powers of base.
  BigInt lo = ipow(base, ae / be);          // base^floor(a/b) <= result
  BigInt hi = lo * base;                    // base^(floor(a/b)+1) > result
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    if (ipow(mid, be) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

inline BigInt floor_pow(const BigInt& base, const BigRat& exponent) {
  return floor_pow(base, boost::multiprecision::numerator(exponent),
                   boost::multiprecision::denominator(exponent));
}

inline std::string rat_to_string(const BigRat& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

BigRat rat_from_string(const std::string& s);

}  // namespace nwlab
