#include "nwlab/adversary.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace nwlab {

namespace {

BitString hybrid_with_table(const TargetedPRG& prg, const BitString& z, std::size_t j,
                            const BitString& s, const BitString& fill) {
  const std::size_t m = prg.params.m;
  if (j > m) throw std::invalid_argument("hybrid_sample: j must lie in [0, m]");
  if (fill.size() != m - j)
    throw std::invalid_argument("hybrid_sample: fill must have m - j bits");
  if (j > 0 && s.size() != prg.params.d)
    throw std::invalid_argument("hybrid_sample: seed must have d bits");
  BitString out(m);
  for (std::size_t i = 0; i < j; ++i)
    out.set_bit(i, z.bit(static_cast<std::size_t>(seed_index(prg.design, i, s))));
  for (std::size_t i = j; i < m; ++i) out.set_bit(i, fill.bit(i - j));
  return out;
}

int decide_deterministic(const Distinguisher& D, std::size_t m, const BitString& x,
                         const BitString& candidate) {
  static const BitString empty_aux;
  return D.decide(m, x, candidate, empty_aux) & 1;
}

}  // namespace

BitString hybrid_sample(const TargetedPRG& prg, const BitString& x, std::size_t j,
                        const BitString& s, const BitString& fill) {
  BitString z = prg.oracle.evaluate(x);
  return hybrid_with_table(prg, z, j, s, fill);
}

AdvantageReport exact_advantage(const Distinguisher& D, const TargetedPRG& prg,
                                const BitString& x) {
  const std::size_t m = prg.params.m;
  const std::size_t d = prg.params.d;
  if (d > 20 || m > 20)
    throw GuardRefusal("exact_advantage: enumeration needs d <= 20 and m <= 20");
  if (D.aux_bits > 8)
    throw GuardRefusal("exact_advantage: aux budget over 8 bits is not enumerable here");

  const std::size_t aux_count = std::size_t{1} << D.aux_bits;
  std::vector<BitString> aux_strings;
  aux_strings.reserve(aux_count);
  for (std::size_t a = 0; a < aux_count; ++a)
    aux_strings.push_back(BitString::from_value(a, D.aux_bits));

  const BitString z = prg.oracle.evaluate(x);

  std::uint64_t seed_hits = 0;
  const std::uint64_t seed_count = 1ULL << d;
  for (std::uint64_t v = 0; v < seed_count; ++v) {
    const BitString out = expand_with_table(prg, z, BitString::from_value(v, d));
    for (const auto& aux : aux_strings) seed_hits += D.decide(m, x, out, aux) & 1;
  }

  std::uint64_t unif_hits = 0;
  const std::uint64_t cand_count = 1ULL << m;
  for (std::uint64_t v = 0; v < cand_count; ++v) {
    const BitString cand = BitString::from_value(v, m);
    for (const auto& aux : aux_strings) unif_hits += D.decide(m, x, cand, aux) & 1;
  }

  const BigRat p_seed(BigInt(seed_hits), BigInt(seed_count) * aux_count);
  const BigRat p_unif(BigInt(unif_hits), BigInt(cand_count) * aux_count);

  AdvantageReport rep;
  rep.aux_enumerated = D.aux_bits > 0;
  rep.beta_signed_b1 = p_seed - p_unif;
  rep.beta_signed_b0 = -rep.beta_signed_b1;
  if (rep.beta_signed_b1 >= 0) {
    rep.beta = rep.beta_signed_b1;
    rep.b_star = 1;
  } else {
    rep.beta = rep.beta_signed_b0;
    rep.b_star = 0;
  }
  return rep;
}

LeakOutput make_leak_output(const BitString& z, const ToyParams& params,
                            const Design& design, std::size_t j, const BitString& y_off,
                            int b, int w_j, const BitString& w_tail) {
  const std::size_t m = params.m, d = params.d, r = params.r, n = params.n;
  if (z.size() != n) throw std::invalid_argument("make_leak_output: |z| must equal n = 2^r");
  if (j < 1 || j > m) throw std::invalid_argument("make_leak_output: j must lie in [1, m]");
  if (y_off.size() != d - r)
    throw std::invalid_argument("make_leak_output: y_off must have d - r bits");
  if (w_tail.size() != m - j)
    throw std::invalid_argument("make_leak_output: w_tail must have m - j bits");

  LeakOutput leak;
  leak.j = j;
  leak.y_off = y_off;
  leak.b = b & 1;
  leak.w_j = w_j & 1;
  leak.w_tail = w_tail;

  // Assemble the full d-bit y with the I_j positions left blank, then sweep
  // k through all 2^r values of y_{I_j} and record h(y_{I_i}) per earlier set.
  const auto& set_j = design.sets[j - 1];
  std::vector<bool> in_j(d, false);
  for (std::size_t pos : set_j) in_j[pos] = true;
  BitString y(d);
  {
    std::size_t off = 0;
    for (std::size_t pos = 0; pos < d; ++pos)
      if (!in_j[pos]) y.set_bit(pos, y_off.bit(off++));
  }
  leak.tables.reserve(j - 1);
  for (std::size_t i = 0; i + 1 < j; ++i) leak.tables.emplace_back(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t t = 0; t < r; ++t)
      y.set_bit(set_j[t], static_cast<int>((k >> (r - 1 - t)) & 1));
    for (std::size_t i = 0; i + 1 < j; ++i) {
      const std::uint64_t idx = seed_index(design, i, y);
      leak.tables[i].set_bit(k, z.bit(static_cast<std::size_t>(idx)));
    }
  }

  leak.serialized = serialize_leak(leak, m);
  return leak;
}

LeakOutput run_leak(const BitString& x, const BitString& z, const ToyParams& params,
                    const Design& design, RandomStream& rng) {
  (void)x;  // the transcript depends on x only through z = f(x)
  const std::size_t j = 1 + static_cast<std::size_t>(rng.next_below(params.m));
  const BitString y_off = rng.next_bits(params.d - params.r);
  const int b = rng.next_bit();
  const int w_j = rng.next_bit();
  const BitString w_tail = rng.next_bits(params.m - j);
  return make_leak_output(z, params, design, j, y_off, b, w_j, w_tail);
}

BitString serialize_leak(const LeakOutput& leak, std::size_t m) {
  const std::size_t j_bits = ceil_log2(BigInt(m));
  BitString out = BitString::from_value(leak.j - 1, j_bits);
  out.append(leak.y_off);
  for (const auto& table : leak.tables) out.append(table);
  out.push_back(leak.b);
  out.push_back(leak.w_j);
  out.append(leak.w_tail);
  return out;
}

LeakOutput deserialize_leak(const BitString& bits, std::size_t m, std::size_t d,
                            std::size_t r) {
  const std::size_t j_bits = ceil_log2(BigInt(m));
  const std::size_t n = std::size_t{1} << r;
  std::size_t cursor = 0;
  auto take = [&](std::size_t count) {
    if (cursor + count > bits.size())
      throw std::invalid_argument("deserialize_leak: transcript too short");
    BitString part(count);
    for (std::size_t i = 0; i < count; ++i) part.set_bit(i, bits.bit(cursor + i));
    cursor += count;
    return part;
  };

  LeakOutput leak;
  leak.j = 1 + static_cast<std::size_t>(take(j_bits).to_value());
  if (leak.j > m) throw std::invalid_argument("deserialize_leak: index j out of range");
  leak.y_off = take(d - r);
  for (std::size_t i = 0; i + 1 < leak.j; ++i) leak.tables.push_back(take(n));
  leak.b = take(1).bit(0);
  leak.w_j = take(1).bit(0);
  leak.w_tail = take(m - leak.j);
  if (cursor != bits.size())
    throw std::invalid_argument("deserialize_leak: trailing bits in transcript");
  leak.serialized = bits;
  return leak;
}

BitString run_attacker(const BitString& x, const LeakOutput& leak, const Distinguisher& D,
                       const ToyParams& params, const Design& design) {
  (void)design;
  const std::size_t m = params.m, n = params.n;
  if (D.aux_bits != 0)
    throw std::invalid_argument("run_attacker: distinguisher must be deterministic");
  if (leak.j < 1 || leak.j > m || leak.tables.size() != leak.j - 1 ||
      leak.w_tail.size() != m - leak.j)
    throw std::invalid_argument("run_attacker: malformed leak transcript");
  for (const auto& table : leak.tables)
    if (table.size() != n)
      throw std::invalid_argument("run_attacker: malformed leak table");

  BitString out(n);
  BitString candidate(m);
  // Suffix is shared across all k: position j carries the guess w_j, the tail
  // carries the sampled uniform bits.
  candidate.set_bit(leak.j - 1, leak.w_j);
  for (std::size_t i = leak.j; i < m; ++i) candidate.set_bit(i, leak.w_tail.bit(i - leak.j));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i + 1 < leak.j; ++i) candidate.set_bit(i, leak.tables[i].bit(k));
    const int vote = decide_deterministic(D, m, x, candidate);
    out.set_bit(k, vote ^ leak.b ^ leak.w_j);
  }
  return out;
}

namespace {

struct CensusCounts {
  std::vector<std::uint64_t> per_j;  // successes for j = 1..m
};

// Successes over (b, w_j, w_tail) for one (j, y_off) cell. For fixed
// candidate suffix the two b values give complementary outputs, so agreement
// for b = 1 is n minus the b = 0 agreement; D runs once per (k, w_j, tail).
void census_cell(const TargetedPRG& prg, const BitString& x, const BitString& z,
                 const Distinguisher& D, std::size_t j, const BitString& y_off,
                 const BigRat& agree_threshold, std::uint64_t& successes) {
  const std::size_t m = prg.params.m, n = prg.params.n;
  const std::size_t tail_len = m - j;
  const std::uint64_t tail_count = 1ULL << tail_len;

  // Tables for this cell: reuse the transcript builder with fixed guesses.
  LeakOutput base = make_leak_output(z, prg.params, prg.design, j, y_off, 0, 0,
                                     BitString(tail_len));

  BitString candidate(m);
  for (std::uint64_t tail_v = 0; tail_v < tail_count; ++tail_v) {
    const BitString tail = BitString::from_value(tail_v, tail_len);
    for (int w = 0; w < 2; ++w) {
      candidate.set_bit(j - 1, w);
      for (std::size_t i = j; i < m; ++i) candidate.set_bit(i, tail.bit(i - j));
      std::size_t agree_b0 = 0;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i + 1 < j; ++i) candidate.set_bit(i, base.tables[i].bit(k));
        const int predicted = decide_deterministic(D, m, x, candidate) ^ w;  // b = 0
        agree_b0 += (predicted == z.bit(k));
      }
      if (BigRat(agree_b0) >= agree_threshold) ++successes;
      if (BigRat(n - agree_b0) >= agree_threshold) ++successes;
    }
  }
}

}  // namespace

CensusReport attack_success_census(const Distinguisher& D, const TargetedPRG& prg,
                                   const BitString& x, unsigned threads) {
  const std::size_t m = prg.params.m, d = prg.params.d, r = prg.params.r,
                    n = prg.params.n;
  if (D.aux_bits != 0)
    throw std::invalid_argument("attack_success_census: distinguisher must be deterministic");
  if ((BigInt(m) << (d - r + m - 1)) > (BigInt(1) << 22))
    throw GuardRefusal("attack_success_census: m * 2^(d-r+m-1) exceeds the 2^22 guard");

  CensusReport rep;
  rep.advantage = exact_advantage(D, prg, x);

  const BitString z = prg.oracle.evaluate(x);
  // Success means agreement >= (1/2 + beta/(2m)) * n.
  const BigRat agree_threshold = BigRat(n) / 2 + BigRat(n) * rep.advantage.beta / (2 * m);

  const std::uint64_t off_count = 1ULL << (d - r);
  std::vector<std::uint64_t> per_j(m, 0);

  if (threads <= 1) {
    for (std::size_t j = 1; j <= m; ++j)
      for (std::uint64_t off = 0; off < off_count; ++off)
        census_cell(prg, x, z, D, j, BitString::from_value(off, d - r), agree_threshold,
                    per_j[j - 1]);
  } else {
    // Partition the off-space per j; integer tallies merge associatively.
    for (std::size_t j = 1; j <= m; ++j) {
      std::vector<std::uint64_t> partial(threads, 0);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
          for (std::uint64_t off = t; off < off_count; off += threads)
            census_cell(prg, x, z, D, j, BitString::from_value(off, d - r),
                        agree_threshold, partial[t]);
        });
      }
      for (auto& th : pool) th.join();
      for (unsigned t = 0; t < threads; ++t) per_j[j - 1] += partial[t];
    }
  }

  // Tuples at index j have probability 1/(m * 2^(d-r) * 4 * 2^(m-j)); put
  // everything over the j = 1 denominator.
  BigInt weight = 0;
  for (std::size_t j = 1; j <= m; ++j) weight += BigInt(per_j[j - 1]) << (j - 1);
  const BigInt total = BigInt(m) << ((d - r) + 2 + (m - 1));
  rep.success_weight = weight;
  rep.total_weight = total;
  rep.fraction = BigRat(weight, total);
  rep.bound = rep.advantage.beta / (8 * m);
  rep.pass = rep.fraction >= rep.bound;
  return rep;
}

LeakLengthBreakdown leak_bit_length(const CoupledParams& p) {
  LeakLengthBreakdown b;
  b.index_bits = BigInt(ceil_log2(BigInt(p.m)));
  b.off_bits = BigInt(p.d) - BigInt(p.r);
  b.guess_bits = BigInt(p.m);
  b.table_bits = BigInt(p.m) * (BigInt(1) << p.s_overlap);
  b.total = b.index_bits + b.off_bits + b.guess_bits + b.table_bits;
  return b;
}

ExponentIdentity leak_length_exponent_identity(const BigRat& alpha, const BigRat& log2_n) {
  ExponentIdentity id;
  const BigRat a3 = alpha * alpha * alpha;
  // log2 m = (alpha^3/5) log2 n; the table term contributes 2 alpha^2 d with
  // d = log2(n)/alpha.
  id.lhs = (a3 / 5) * log2_n + 2 * alpha * log2_n;
  id.rhs = (2 * alpha + a3 / 5) * log2_n;
  id.holds = id.lhs == id.rhs;
  return id;
}

HardnessEstimate test_hardness(const HardFunctionOracle& f, const AttackerPair& pair,
                               const HardnessBound& bound, std::size_t trials,
                               RandomStream& rng, double failure_prob) {
  if (bound.n == 0 || trials == 0)
    throw std::domain_error("test_hardness: need n >= 1 and trials >= 1");
  HardnessEstimate est;
  est.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const BitString x = rng.next_bits(bound.n);
    const BitString z = f.evaluate(x);
    const BitString leaked = pair.leak(x, z, rng);
    if (leaked.size() > bound.ell) {
      ++est.ell_violations;  // voided: counts as attacker failure
      continue;
    }
    const BitString guess = pair.attack(x, leaked, rng);
    if (guess.size() == z.size() && hamming_distance(guess, z) < bound.dist)
      ++est.successes;
  }
  est.estimate = static_cast<double>(est.successes) / static_cast<double>(trials);
  const double radius =
      std::sqrt(std::log(2.0 / failure_prob) / (2.0 * static_cast<double>(trials)));
  est.ci_low = std::max(0.0, est.estimate - radius);
  est.ci_high = std::min(1.0, est.estimate + radius);
  est.violates = est.ci_low >= 1.0 / static_cast<double>(bound.n);
  return est;
}

}  // namespace nwlab
