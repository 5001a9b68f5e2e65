#include "nwlab/counting.hpp"

#include <cmath>
#include <stdexcept>

namespace nwlab {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p must lie in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

BigInt hamming_ball_volume(std::uint64_t n, std::uint64_t radius) {
  if (radius > n) throw std::domain_error("hamming_ball_volume: radius > n");
  BigInt total = 0;
  BigInt term = 1;  // C(n, 0)
  for (std::uint64_t i = 0;; ++i) {
    total += term;
    if (i == radius) break;
    term *= n - i;
    term /= i + 1;
  }
  return total;
}

BigInt bad_set_bound(std::uint64_t n, std::uint64_t ell, std::uint64_t dist) {
  if (n == 0) throw std::domain_error("bad_set_bound: n must be positive");
  if (dist == 0 || dist > n) throw std::domain_error("bad_set_bound: need 1 <= dist <= n");
  return (BigInt(1) << (ell + 1)) * (2 * BigInt(n)) * hamming_ball_volume(n, dist - 1);
}

BigRat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
  return BigRat(num, den);
}

}  // namespace nwlab
