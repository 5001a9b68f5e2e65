#pragma once

// Distinguisher-to-predictor machinery: hybrid distributions, exact advantage
// by enumeration, the leak/attacker pair built from a distinguisher, the
// exact census of leak choices for which the attacker's output approximates
// the hard table, leakage-length accounting, and a Monte Carlo hardness
// tester.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nwlab/bitstring.hpp"
#include "nwlab/exact.hpp"
#include "nwlab/params.hpp"
#include "nwlab/prg.hpp"
#include "nwlab/random_stream.hpp"

namespace nwlab {

// decide(m, target, candidate, aux) -> {0,1}. Deterministic given aux;
// deterministic distinguishers declare aux_bits = 0 and ignore aux.
// Probabilistic ones read their coins from aux (length aux_bits), which the
// exact routines enumerate.
struct Distinguisher {
  std::string label;
  std::size_t aux_bits = 0;
  std::function<int(std::size_t, const BitString&, const BitString&, const BitString&)> decide;
};

struct AdvantageReport {
  BigRat beta_signed_b1;  // P[D(G(x,s))=1] - P[D(uniform)=1]
  BigRat beta_signed_b0;  // the negation
  BigRat beta;            // max absolute value
  int b_star = 1;         // attains +beta; ties toward 1
  bool aux_enumerated = false;
};

// First j bits from the generator over seed s, remaining m-j bits copied from
// fill. j = 0 ignores s entirely; j = m ignores fill.
BitString hybrid_sample(const TargetedPRG& prg, const BitString& x, std::size_t j,
                        const BitString& s, const BitString& fill);

// Exact rational advantage by enumerating all 2^d seeds and all 2^m uniform
// candidates (times 2^aux_bits aux strings). Guards: d <= 20, m <= 20,
// aux_bits <= 8.
AdvantageReport exact_advantage(const Distinguisher& D, const TargetedPRG& prg,
                                const BitString& x);

// Transcript of one leak run: random output index j in [1..m], the seed bits
// off I_j, one 2^r-bit table per earlier set, guess bits b and w_j, and the
// uniform tail for positions j+1..m. `serialized` is the canonical bit form:
//   ceil(log2 m) bits of j-1 | y_off | tables | b | w_j | w_tail.
struct LeakOutput {
  std::size_t j = 1;  // 1-based
  BitString y_off;
  std::vector<BitString> tables;
  int b = 0;
  int w_j = 0;
  BitString w_tail;
  BitString serialized;
};

// Draw order: j, y_off, b, w_j, w_tail (tables are deterministic given z).
LeakOutput run_leak(const BitString& x, const BitString& z, const ToyParams& params,
                    const Design& design, RandomStream& rng);

// Deterministic variant used by the census: all random choices supplied.
LeakOutput make_leak_output(const BitString& z, const ToyParams& params,
                            const Design& design, std::size_t j, const BitString& y_off,
                            int b, int w_j, const BitString& w_tail);

BitString serialize_leak(const LeakOutput& leak, std::size_t m);
LeakOutput deserialize_leak(const BitString& bits, std::size_t m, std::size_t d,
                            std::size_t r);

// Predictor sweep: output bit k = D(m, x, H_{j-1}(k)) xor b xor w_j, where the
// candidate H_{j-1}(k) takes bit i < j from tables[i][k], bit j from w_j, and
// bits j+1..m from w_tail. Output length n = 2^r.
BitString run_attacker(const BitString& x, const LeakOutput& leak, const Distinguisher& D,
                       const ToyParams& params, const Design& design);

struct CensusReport {
  AdvantageReport advantage;
  BigRat fraction;  // exact probability over (j, y_off, b, w_j, w_tail)
  BigRat bound;     // beta / (8m)
  bool pass = false;
  BigInt success_weight;  // numerator of fraction at the common denominator
  BigInt total_weight;
};

// Exact fraction of leak random choices for which the attacker agrees with z
// on at least a 1/2 + beta/(2m) fraction of positions. Guard:
// m * 2^(d - r + m - 1) <= 2^22.
CensusReport attack_success_census(const Distinguisher& D, const TargetedPRG& prg,
                                   const BitString& x, unsigned threads = 1);

struct LeakLengthBreakdown {
  BigInt index_bits;   // ceil(log2 m)
  BigInt off_bits;     // d - r
  BigInt guess_bits;   // m  (b, w_j, tail, counted as in the worst case)
  BigInt table_bits;   // m * 2^s_overlap
  BigInt total;
};

// Worst-case output-length accounting for the leak construction. Tables are
// stored 2^r wide at runtime; the accounting charges the 2^(2 alpha^2 d)
// bound, which is what the epsilon identity is about.
LeakLengthBreakdown leak_bit_length(const CoupledParams& p);

struct ExponentIdentity {
  BigRat lhs;  // log2(m * 2^(2 alpha^2 d)) = (alpha^3/5) L + 2 alpha L
  BigRat rhs;  // epsilon * L = (2 alpha + alpha^3/5) L
  bool holds = false;
};

// Exact-rational check that the dominant leak term has exponent epsilon,
// for log2 n = L.
ExponentIdentity leak_length_exponent_identity(const BigRat& alpha, const BigRat& log2_n);

// A cooperating pair under test: leak sees (x, z), the attacker sees x and
// the leaked bits.
struct AttackerPair {
  std::string label;
  std::function<BitString(const BitString&, const BitString&, RandomStream&)> leak;
  std::function<BitString(const BitString&, const BitString&, RandomStream&)> attack;
};

struct HardnessBound {
  std::size_t n = 0;
  std::uint64_t ell = 0;
  std::uint64_t dist = 0;
};

struct HardnessEstimate {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t ell_violations = 0;  // trials voided: leak output exceeded ell
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  bool violates = false;  // ci_low >= 1/n
};

// Monte Carlo estimate of P[d_H(A(x, leak(x, f(x))), f(x)) < dist] with a
// fresh uniform target x per trial. A trial whose leak output exceeds ell
// counts against the attacker. Two-sided Hoeffding interval at the given
// failure probability.
HardnessEstimate test_hardness(const HardFunctionOracle& f, const AttackerPair& pair,
                               const HardnessBound& bound, std::size_t trials,
                               RandomStream& rng, double failure_prob = 0.05);

}  // namespace nwlab
