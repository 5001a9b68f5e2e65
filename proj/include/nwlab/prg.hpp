#pragma once

// The targeted generator: output bit j is the hard table indexed by the seed
// restricted to design set I_j. Restriction takes the seed bits at the
// ascending indices of I_j and reads them big-endian.

#include <functional>
#include <utility>
#include <vector>

#include "nwlab/bitstring.hpp"
#include "nwlab/design.hpp"
#include "nwlab/oracle.hpp"
#include "nwlab/params.hpp"

namespace nwlab {

struct TargetedPRG {
  Design design;
  HardFunctionOracle oracle;
  ToyParams params;
};

// Validates the wiring: design.r == params.r, design.d == params.d, at least
// m sets, and n == 2^r so every restricted seed indexes into the table.
// Violations throw std::domain_error at construction, never at expand time.
TargetedPRG make_prg(Design design, HardFunctionOracle oracle, ToyParams params);

// Output of length m for |x| == n, |seed| == d.
BitString expand(const TargetedPRG& prg, const BitString& x, const BitString& seed);

// Same, against a precomputed table z = oracle(x); the enumeration loops use
// this to evaluate the oracle once.
BitString expand_with_table(const TargetedPRG& prg, const BitString& z,
                            const BitString& seed);

// Table index for output bit j (0-based set index) under the given seed.
std::uint64_t seed_index(const Design& design, std::size_t j, const BitString& seed);

// All 2^d (seed, output) pairs in lexicographic seed order. Guard: d <= 24.
void enumerate_outputs(const TargetedPRG& prg, const BitString& x,
                       const std::function<void(const BitString&, const BitString&)>& sink);
std::vector<std::pair<BitString, BitString>> enumerate_outputs(const TargetedPRG& prg,
                                                               const BitString& x);

}  // namespace nwlab
