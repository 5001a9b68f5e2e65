#include "nwlab/params.hpp"

#include <stdexcept>

namespace nwlab {

CoupledParams derive_coupled_params(std::size_t m, const BigRat& alpha, unsigned C) {
  if (m < 2) throw std::domain_error("derive_coupled_params: m must be >= 2");
  if (!(alpha > 0 && alpha < 1))
    throw std::domain_error("derive_coupled_params: alpha must lie in (0,1)");

  CoupledParams p;
  p.alpha = alpha;
  p.m = m;
  p.security_c = C;

  const BigRat a2 = alpha * alpha;
  const BigRat a3 = a2 * alpha;

  const BigRat exp_rat = 5 / a3;
  p.exponent_rounded = !rat_is_integer(exp_rat);
  p.n_exponent = static_cast<unsigned>(rat_ceil(exp_rat));
  p.n = ipow(BigInt(m), p.n_exponent);

  p.r = ceil_log2(p.n);
  // Smallest d with floor(alpha*d) = r: d = ceil(r/alpha).
  p.d = static_cast<std::size_t>(rat_ceil(BigRat(p.r) / alpha));
  p.s_overlap = static_cast<std::size_t>(rat_floor(2 * a2 * p.d));

  p.epsilon = 2 * alpha + a3 / 5;
  // ell = floor(n^epsilon) = floor(m^(n_exponent * epsilon)), exact because
  // n is exactly m^n_exponent.
  p.ell = floor_pow(BigInt(m), BigRat(p.n_exponent) * p.epsilon);

  const BigInt m2 = BigInt(m) * m;
  p.dist_threshold = p.n * (m2 - 2) / (2 * m2);

  const BigRat leak_time = 2 + a3 / 5;
  const BigRat attack_time = 3 + BigRat(C + 1) * a3 / 5;
  p.c1 = static_cast<unsigned>(rat_ceil(leak_time > attack_time ? leak_time : attack_time));
  p.c2 = static_cast<unsigned>(rat_ceil(1 / alpha + 1 + BigRat(C) * a3 / 5));

  p.design_size_floor = floor_pow(BigInt(2), alpha * alpha * a2 * p.d / 5);
  p.design_floor_covers_m = p.design_size_floor >= BigInt(m);

  p.beyond_toy_scale = bit_length(p.n) > 48;
  return p;
}

ToyParams toy_from_coupled(const CoupledParams& p) {
  if (p.beyond_toy_scale)
    throw std::domain_error("toy_from_coupled: parameters are beyond toy scale");
  if (p.n != (BigInt(1) << p.r))
    throw std::domain_error("toy_from_coupled: n is not exactly 2^r");
  ToyParams t;
  t.m = p.m;
  t.n = static_cast<std::size_t>(p.n);
  t.d = p.d;
  t.r = p.r;
  t.s_overlap = p.s_overlap;
  return t;
}

}  // namespace nwlab
