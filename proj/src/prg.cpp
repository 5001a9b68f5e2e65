#include "nwlab/prg.hpp"

#include <stdexcept>
#include <string>

namespace nwlab {

TargetedPRG make_prg(Design design, HardFunctionOracle oracle, ToyParams params) {
  if (params.m == 0 || params.n == 0 || params.d == 0 || params.r == 0)
    throw std::domain_error("make_prg: all parameters must be positive");
  if (design.r != params.r)
    throw std::domain_error("make_prg: design set size does not match params.r");
  if (design.d != params.d)
    throw std::domain_error("make_prg: design universe does not match params.d");
  if (design.sets.size() < params.m)
    throw std::domain_error("make_prg: design has fewer than m sets");
  if (params.r > 24)
    throw std::domain_error("make_prg: r too large for a materialized table (r <= 24)");
  if (params.n != (std::size_t{1} << params.r))
    throw std::domain_error("make_prg: need n == 2^r so seed restrictions index the table");
  auto check = verify_design(design);
  if (!check.valid) throw std::domain_error("make_prg: invalid design: " + check.detail);
  return TargetedPRG{std::move(design), std::move(oracle), params};
}

std::uint64_t seed_index(const Design& design, std::size_t j, const BitString& seed) {
  std::uint64_t idx = 0;
  for (std::size_t pos : design.sets[j]) idx = (idx << 1) | static_cast<std::uint64_t>(seed.bit(pos));
  return idx;
}

BitString expand_with_table(const TargetedPRG& prg, const BitString& z,
                            const BitString& seed) {
  if (z.size() != prg.params.n)
    throw std::invalid_argument("expand: table length must equal n");
  if (seed.size() != prg.params.d)
    throw std::invalid_argument("expand: seed length must equal d");
  BitString out(prg.params.m);
  for (std::size_t j = 0; j < prg.params.m; ++j)
    out.set_bit(j, z.bit(static_cast<std::size_t>(seed_index(prg.design, j, seed))));
  return out;
}

BitString expand(const TargetedPRG& prg, const BitString& x, const BitString& seed) {
  if (x.size() != prg.params.n)
    throw std::invalid_argument("expand: target length must equal n");
  BitString z = prg.oracle.evaluate(x);
  if (z.size() != x.size())
    throw std::logic_error("expand: oracle is not length-preserving");
  return expand_with_table(prg, z, seed);
}

void enumerate_outputs(const TargetedPRG& prg, const BitString& x,
                       const std::function<void(const BitString&, const BitString&)>& sink) {
  if (prg.params.d > 24)
    throw GuardRefusal("enumerate_outputs: seed space 2^" + std::to_string(prg.params.d) +
                       " exceeds the d <= 24 guard");
  const BitString z = prg.oracle.evaluate(x);
  const std::uint64_t count = 1ULL << prg.params.d;
  for (std::uint64_t v = 0; v < count; ++v) {
    BitString seed = BitString::from_value(v, prg.params.d);
    sink(seed, expand_with_table(prg, z, seed));
  }
}

std::vector<std::pair<BitString, BitString>> enumerate_outputs(const TargetedPRG& prg,
                                                               const BitString& x) {
  std::vector<std::pair<BitString, BitString>> rows;
  enumerate_outputs(prg, x, [&rows](const BitString& seed, const BitString& out) {
    rows.emplace_back(seed, out);
  });
  return rows;
}

}  // namespace nwlab
