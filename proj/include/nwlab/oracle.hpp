#pragma once

// Stand-ins for the hard function f: length-preserving, deterministic maps
// from n-bit targets to n-bit truth tables. The real f is hypothetical; tests
// need controllable substitutes: explicit tables, keyed pseudorandom tables,
// and constants for planted attack instances.

#include <functional>
#include <string>

#include "nwlab/bitstring.hpp"

namespace nwlab {

struct HardFunctionOracle {
  std::string description;
  std::function<BitString(const BitString&)> evaluate;
};

// Always returns `table`; requires |x| == |table|.
HardFunctionOracle table_oracle(BitString table);

// z = PRF(key, x): an independent uniform-looking table per target.
HardFunctionOracle seeded_oracle(std::uint64_t key);

// Like seeded_oracle but every table has exactly |x|/2 ones (|x| must be
// even). Balanced tables make single-bit marginals exactly uniform, which
// pins down planted-advantage fixtures.
HardFunctionOracle balanced_oracle(std::uint64_t key);

// All-zeros / all-ones tables.
HardFunctionOracle constant_oracle(int bit);

}  // namespace nwlab
