#pragma once

// The self-delimiting padding codec and the two seed-enumeration
// derandomizers: majority vote for deciders, first-accepted-candidate for
// search problems, plus the distinguishers a failing derandomization induces.

#include <cstdint>
#include <string>

#include "nwlab/adversary.hpp"
#include "nwlab/bitstring.hpp"
#include "nwlab/prg.hpp"
#include "nwlab/searchprob.hpp"

namespace nwlab {

struct PaddedString {
  BitString raw;
  std::size_t payload_len = 0;
};

// Each payload bit x_i becomes the pair 1,x_i; zero filler brings the length
// up to k. |raw| = max(2|x|, k).
PaddedString pad(const BitString& x, std::size_t k);

// Reads pairs left to right, emitting the odd bit while the even bit is 1;
// stops at a 0 even bit or exhaustion. A dangling 1 is a malformed encoding
// and throws std::invalid_argument.
BitString unpad(const BitString& x_prime);

// A randomized decider M(x; gamma) -> {0,1} reading rand_bits coins.
struct RandomizedDecider {
  std::string label;
  std::size_t rand_bits = 0;
  std::function<int(const BitString&, const BitString&)> decide;
};

// Majority vote of M(x, G(pad(x, pad_target), s)) over all 2^d seeds; accepts
// iff the count strictly exceeds 2^(d-1). Requires |pad(x, pad_target)| to be
// exactly the generator's target length and rand_bits <= m. Guard: d <= 20.
int derandomize_decision(const RandomizedDecider& M, const TargetedPRG& prg,
                         const BitString& x, std::size_t pad_target);

struct SearchOutcome {
  bool found = false;
  BitString witness;
  BitString seed_used;        // meaningful when found
  std::uint64_t seeds_tried = 0;
};

// Runs the finder on each seed's pseudorandom string in lexicographic seed
// order and returns the first candidate the exhaustively derandomized
// verifier accepts; `found` is false when no seed works. Guard: d <= 20.
SearchOutcome derandomize_search(const SearchProblem& problem, const TargetedPRG& prg,
                                 const BitString& x, std::size_t pad_target);

// D(m, x', r) = M(unpad(x'); r): the distinguisher a wrongly-decided input
// induces. Unpad failures propagate.
Distinguisher induced_decision_distinguisher(const RandomizedDecider& M);

// D(m, x', r) = derandomized-verify(x, find(x, r-prefix)) with x = unpad(x').
Distinguisher induced_search_distinguisher(const SearchProblem& problem);

// Padding exponent for a finder with time exponent a and a verifier with
// space multiplier b: max(a, b). Requires a, b >= 1.
unsigned pad_exponent(unsigned a, unsigned b);

}  // namespace nwlab
