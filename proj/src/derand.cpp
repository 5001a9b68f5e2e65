#include "nwlab/derand.hpp"

#include <stdexcept>

namespace nwlab {

PaddedString pad(const BitString& x, std::size_t k) {
  PaddedString out;
  out.payload_len = x.size();
  const std::size_t encoded = 2 * x.size();
  const std::size_t total = std::max(encoded, k);
  BitString raw(total);
  for (std::size_t i = 0; i < x.size(); ++i) {
    raw.set_bit(2 * i, 1);
    raw.set_bit(2 * i + 1, x.bit(i));
  }
  // remaining bits are already zero filler
  out.raw = std::move(raw);
  return out;
}

BitString unpad(const BitString& x_prime) {
  BitString out;
  std::size_t i = 0;
  while (i < x_prime.size() && x_prime.bit(i) == 1) {
    if (i + 1 >= x_prime.size())
      throw std::invalid_argument("unpad: dangling pair marker at end of encoding");
    out.push_back(x_prime.bit(i + 1));
    i += 2;
  }
  return out;
}

namespace {

BitString padded_target(const TargetedPRG& prg, const BitString& x, std::size_t pad_target) {
  PaddedString xp = pad(x, pad_target);
  if (xp.raw.size() != prg.params.n)
    throw std::invalid_argument(
        "derandomize: padded input length " + std::to_string(xp.raw.size()) +
        " does not match the generator target length " + std::to_string(prg.params.n));
  return std::move(xp.raw);
}

}  // namespace

int derandomize_decision(const RandomizedDecider& M, const TargetedPRG& prg,
                         const BitString& x, std::size_t pad_target) {
  if (prg.params.d > 20)
    throw GuardRefusal("derandomize_decision: seed enumeration needs d <= 20");
  if (M.rand_bits > prg.params.m)
    throw std::invalid_argument("derandomize_decision: decider wants more coins than m");
  const BitString x_prime = padded_target(prg, x, pad_target);
  const BitString z = prg.oracle.evaluate(x_prime);

  const std::uint64_t seed_count = 1ULL << prg.params.d;
  std::uint64_t votes = 0;
  for (std::uint64_t v = 0; v < seed_count; ++v) {
    const BitString out = expand_with_table(prg, z, BitString::from_value(v, prg.params.d));
    votes += M.decide(x, out) & 1;
  }
  return votes > seed_count / 2 ? 1 : 0;  // strictly more than half
}

SearchOutcome derandomize_search(const SearchProblem& problem, const TargetedPRG& prg,
                                 const BitString& x, std::size_t pad_target) {
  if (prg.params.d > 20)
    throw GuardRefusal("derandomize_search: seed enumeration needs d <= 20");
  const std::size_t gamma_len = problem.finder_rand_len(x.size());
  if (gamma_len > prg.params.m)
    throw std::invalid_argument("derandomize_search: finder wants more coins than m");
  const BitString x_prime = padded_target(prg, x, pad_target);
  const BitString z = prg.oracle.evaluate(x_prime);

  SearchOutcome outcome;
  const std::uint64_t seed_count = 1ULL << prg.params.d;
  for (std::uint64_t v = 0; v < seed_count; ++v) {
    const BitString seed = BitString::from_value(v, prg.params.d);
    const BitString stretch = expand_with_table(prg, z, seed);
    BitString gamma(gamma_len);
    for (std::size_t i = 0; i < gamma_len; ++i) gamma.set_bit(i, stretch.bit(i));
    const BitString candidate = problem.find(x, gamma);
    ++outcome.seeds_tried;
    if (derandomized_verify(problem, x, candidate) == 1) {
      outcome.found = true;
      outcome.witness = candidate;
      outcome.seed_used = seed;
      return outcome;
    }
  }
  return outcome;  // empty witness
}

Distinguisher induced_decision_distinguisher(const RandomizedDecider& M) {
  Distinguisher D;
  D.label = "induced-decision:" + M.label;
  D.aux_bits = 0;
  D.decide = [M](std::size_t, const BitString& x_prime, const BitString& candidate,
                 const BitString&) { return M.decide(unpad(x_prime), candidate) & 1; };
  return D;
}

Distinguisher induced_search_distinguisher(const SearchProblem& problem) {
  Distinguisher D;
  D.label = "induced-search:" + problem.label;
  D.aux_bits = 0;
  D.decide = [problem](std::size_t, const BitString& x_prime, const BitString& candidate,
                       const BitString&) {
    const BitString x = unpad(x_prime);
    const std::size_t gamma_len = problem.finder_rand_len(x.size());
    if (gamma_len > candidate.size())
      throw std::invalid_argument("induced distinguisher: candidate shorter than gamma");
    BitString gamma(gamma_len);
    for (std::size_t i = 0; i < gamma_len; ++i) gamma.set_bit(i, candidate.bit(i));
    return derandomized_verify(problem, x, problem.find(x, gamma));
  };
  return D;
}

unsigned pad_exponent(unsigned a, unsigned b) {
  if (a < 1 || b < 1) throw std::domain_error("pad_exponent: exponents must be >= 1");
  return a > b ? a : b;
}

}  // namespace nwlab
