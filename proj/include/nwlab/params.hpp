#pragma once

// Generator parameter sets. ToyParams decouples the knobs so desk-scale
// instances exist; the coupled parameterization ties everything to (m, alpha)
// and is reported exactly (big integers) even when the values are far beyond
// anything expandable, with a beyond_toy_scale marker.

#include <cstddef>
#include <cstdint>

#include "nwlab/exact.hpp"

namespace nwlab {

struct ToyParams {
  std::size_t m = 0;  // output length
  std::size_t n = 0;  // target/table length; must equal 2^r
  std::size_t d = 0;  // seed length
  std::size_t r = 0;  // design set size
  std::size_t s_overlap = 0;  // design overlap bound
};

struct CoupledParams {
  BigRat alpha;
  std::size_t m = 0;
  unsigned security_c = 0;   // C in the security target C*log m
  BigInt n;                  // m^ceil(5/alpha^3)
  unsigned n_exponent = 0;   // ceil(5/alpha^3)
  bool exponent_rounded = false;
  std::size_t d = 0;         // ceil(r/alpha), so floor(alpha*d) == r
  std::size_t r = 0;         // ceil(log2 n)
  std::size_t s_overlap = 0; // floor(2*alpha^2*d)
  BigRat epsilon;            // 2*alpha + alpha^3/5
  BigInt ell;                // floor(n^epsilon)
  BigInt dist_threshold;     // floor((1/2 - 1/m^2)*n)
  // Cost-accounting exponents: ceilings of the exact rational exponents of
  // the leak/attacker constructions' time (in n) and of their space
  // multiplier (in log n). Derived, not hard-coded:
  //   leak time      n^(2 + alpha^3/5)
  //   attacker time  n^(3 + (C+1)*alpha^3/5)
  //   space          (1/alpha + 1 + C*alpha^3/5) * log n
  unsigned c1 = 0;
  unsigned c2 = 0;
  // Both sides of the size-floor coupling, with slack recorded instead of
  // resolved: floor(2^(alpha^4 d / 5)) vs m.
  BigInt design_size_floor;
  bool design_floor_covers_m = false;
  // n too large for any enumeration; values above remain exact regardless.
  bool beyond_toy_scale = false;
};

// Computes the full coupled parameter set from (m, alpha, C).
// Requires m >= 2 and alpha in (0, 1).
CoupledParams derive_coupled_params(std::size_t m, const BigRat& alpha, unsigned C);

// Desk-scale projection: requires n = 2^r with everything fitting in size_t;
// beyond_toy_scale parameter sets throw std::domain_error.
ToyParams toy_from_coupled(const CoupledParams& p);

}  // namespace nwlab
