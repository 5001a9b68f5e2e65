#pragma once

// Promise search problems (verifier/finder pairs with declared randomness
// lengths), the hardness search problem over enumerated machine pairs with
// its exact oracle, sampling verifier and random-string finder, and the
// exact bad-set census behind the "random strings are hard targets" bound.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nwlab/bitstring.hpp"
#include "nwlab/exact.hpp"
#include "nwlab/machine.hpp"
#include "nwlab/random_stream.hpp"

namespace nwlab {

struct SearchProblem {
  std::string label;
  // verify(x, y, omega) -> {0,1}; omega has verifier_rand_len(|x|) bits.
  std::function<int(const BitString&, const BitString&, const BitString&)> verify;
  // find(x, gamma) -> y; gamma has finder_rand_len(|x|) bits.
  std::function<BitString(const BitString&, const BitString&)> find;
  std::function<std::size_t(std::size_t)> finder_rand_len;
  std::function<std::size_t(std::size_t)> verifier_rand_len;
  // Optional exact membership for toy problems; null when undefined.
  std::function<bool(const BitString&, const BitString&)> yes;
  std::function<bool(const BitString&, const BitString&)> no;
};

// Exhaustively derandomized verifier: strict majority of verify over all
// omega. On promise pairs (acceptance >= 2/3 or <= 1/3) this equals the
// promised answer exactly. Guard: verifier_rand_len(|x|) <= 20.
int derandomized_verify(const SearchProblem& problem, const BitString& x,
                        const BitString& y);

struct HardnessProblemParams {
  std::size_t n = 0;
  unsigned c1 = 2;          // step budget n^c1
  unsigned c2 = 2;          // work-cell budget c2 * ceil(log2 n)
  std::uint64_t ell = 0;    // leakage budget
  std::uint64_t dist = 1;   // approximation threshold (strict <)
  std::size_t max_desc_bits = 4;
  std::size_t leak_rand_bits = 0;
  std::size_t attack_rand_bits = 4;
  std::size_t sample_count = 0;  // 0: Chernoff-sized from the 1/(4n) gap
};

TruncationBudget budget_for(const HardnessProblemParams& params);

// The verifier's per-pair sample count surviving a union bound over all
// enumerated pairs: ceil(2 ln(2/failure) / gap^2).
std::size_t chernoff_samples(double gap, double failure_prob);

enum class OracleVerdict { yes, no, neither };

// Exact classification of (x, r): for every description pair (A, leak) with
// |A|, |leak| <= max_desc_bits, the success probability
//   P[|leak'(x,r)| <= ell  and  d_H(A'(x, leak'(x,r)), r) < dist]
// is computed exactly over the machines' joint random tapes. yes iff all
// pairs stay below 1/(2n); no iff |x| != |r| or some pair reaches 1/n;
// neither in the promise gap. Machines run budget-truncated; a truncated run
// contributes an empty output. Guards: max_desc_bits <= 6 and
// 2^(leak_rand_bits + attack_rand_bits) <= 4096.
OracleVerdict hardness_yes_oracle(const BitString& x, const BitString& r,
                                  const HardnessProblemParams& params);

// Rejects immediately on |x| != |r|; otherwise estimates each pair's success
// probability from sample_count simulations and rejects on the first
// estimate exceeding 3/(4n). Runs are cached per distinct decoded machine.
int hardness_verifier(const BitString& x, const BitString& r,
                      const HardnessProblemParams& params, RandomStream& rng);

// Uniform string of the same length.
BitString hardness_finder(const BitString& x, RandomStream& rng);

// Function-level pair for the bad-set census; leak is deterministic (fix a
// machine's tape to get one from a probabilistic leak).
struct CensusPair {
  std::string label;
  std::function<BitString(const BitString&, const BitString&)> leak;  // (x, r) -> w
  std::size_t attack_rand_bits = 0;
  // (x, w, tape) -> guess
  std::function<BitString(const BitString&, const BitString&, const BitString&)> attack;
};

// Machine-backed census pair: leak runs on x||r with the given fixed tape and
// an output cap of ell+1; the attacker runs on x||w capped at n = |x| bits.
CensusPair census_pair_from_machines(const Machine& attacker, const Machine& leak,
                                     const TruncationBudget& budget, std::uint64_t ell,
                                     std::size_t attack_rand_bits,
                                     BitString leak_tape = BitString());

// Exact count of r in {0,1}^n with
//   P_tape[|leak(x,r)| <= ell and d_H(attack(x, leak(x,r)), r) < dist] >= 1/(2n).
// Guards: n <= 14, attack paths <= 4096.
BigInt random_is_hard_census(const CensusPair& pair, const BitString& x,
                             std::uint64_t ell, std::uint64_t dist,
                             unsigned threads = 1);

struct HardnessCensus {
  std::uint64_t total = 0;    // 2^n
  std::uint64_t not_yes = 0;  // r failing the all-pairs < 1/(2n) test
  std::uint64_t no = 0;       // r with some pair >= 1/n
};

// Exhaustive classification of every r in {0,1}^n against the enumerated
// machine pairs (the finder-failure census). Shares run caches across r.
// Guards as hardness_yes_oracle plus n <= 14.
HardnessCensus hardness_yes_census(const BitString& x, const HardnessProblemParams& params,
                                   unsigned threads = 1);

// Toy problems.
SearchProblem identity_problem();
// yes iff 3*agree(x,y) >= 2n, no iff 3*agree(x,y) <= n; spot-check verifier,
// finder flips x's first flip_bits positions per its coins. n must be a power
// of two (keeps the position sample uniform).
SearchProblem agreement_problem(std::size_t flip_bits);
// yes iff y agrees with x somewhere, no iff y is the bitwise complement of x;
// deterministic full-scan verifier, finder outputs its coins.
SearchProblem needle_problem();
// The hardness relation packaged as a search problem; omega (64 bits) seeds
// the sampling verifier's stream.
SearchProblem hardness_search_problem(const HardnessProblemParams& params);

}  // namespace nwlab
