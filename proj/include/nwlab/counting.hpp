#pragma once

// Hamming geometry and the exact counting forms behind the "random is hard"
// bound. All counts are exact big integers; the binary entropy function is
// the only floating-point quantity and is used solely as an upper-bound
// check, never as a count.

#include <cstdint>

#include "nwlab/exact.hpp"

namespace nwlab {

// H(p) = p log2(1/p) + (1-p) log2(1/(1-p)); H(0) = H(1) = 0.
// p outside [0,1] throws std::domain_error.
double binary_entropy(double p);

BigInt binomial(std::uint64_t n, std::uint64_t k);

// Number of length-n strings within Hamming distance `radius` of a fixed
// center: sum_{i=0}^{radius} C(n, i). Requires radius <= n.
BigInt hamming_ball_volume(std::uint64_t n, std::uint64_t radius);

// Exact combinatorial form of the bad-set size bound:
//   2^(ell+1) * 2n * vol(n, dist-1).
// The strict inequality d_H(. , .) < dist is what makes the ball radius
// dist-1. Requires 1 <= dist <= n.
BigInt bad_set_bound(std::uint64_t n, std::uint64_t ell, std::uint64_t dist);

}  // namespace nwlab
