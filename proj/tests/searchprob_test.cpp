#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "nwlab/counting.hpp"
#include "nwlab/searchprob.hpp"

using namespace nwlab;

namespace {

HardnessProblemParams toy_params(std::size_t n, std::uint64_t ell, std::uint64_t dist,
                                 std::size_t desc_bits, std::size_t leak_bits,
                                 std::size_t attack_bits) {
  HardnessProblemParams p;
  p.n = n;
  p.ell = ell;
  p.dist = dist;
  p.max_desc_bits = desc_bits;
  p.leak_rand_bits = leak_bits;
  p.attack_rand_bits = attack_bits;
  return p;
}

// Distinct decoded machines among all descriptions up to max_bits.
std::vector<Machine> distinct_machines(std::size_t max_bits) {
  std::vector<Machine> out;
  std::set<std::string> seen;
  for (const auto& desc : enumerate_machines(max_bits)) {
    Machine m = decode(desc.bits);
    if (seen.insert(machine_table_key(m)).second) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("chernoff sample sizing") {
  CHECK(chernoff_samples(0.25, 0.05) == 119);
  CHECK(chernoff_samples(0.9, 0.9) >= 1);
  // halving the gap quadruples the count
  const std::size_t wide = chernoff_samples(0.2, 0.01);
  const std::size_t narrow = chernoff_samples(0.1, 0.01);
  CHECK(narrow >= 4 * wide - 4);
  CHECK(narrow <= 4 * wide + 4);
  CHECK_THROWS_AS(chernoff_samples(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(chernoff_samples(0.5, 1.5), std::domain_error);
}

TEST_CASE("budget arithmetic") {
  auto b = budget_for(toy_params(8, 0, 1, 4, 0, 4));
  CHECK(b.max_steps == 64);        // n^2
  CHECK(b.max_work_cells == 6);    // 2 * log2(8)
}

TEST_CASE("hardness oracle: length mismatch is a no") {
  auto params = toy_params(8, 0, 1, 2, 0, 2);
  CHECK(hardness_yes_oracle(BitString(8), BitString(7), params) == OracleVerdict::no);
}

TEST_CASE("hardness oracle: dist = 0 makes the event empty, so yes") {
  auto params = toy_params(8, 0, 0, 2, 0, 2);
  CHECK(hardness_yes_oracle(BitString(8), BitString(8), params) == OracleVerdict::yes);
}

TEST_CASE("hardness oracle: the copier pair defeats r = x") {
  // the all-ones description copies x (its first n input bits); paired with a
  // silent leak it reproduces r = x exactly, which the exact enumeration sees
  auto params = toy_params(8, 0, 1, 1, 0, 2);
  const BitString x = BitString::from_string("10110100");
  CHECK(hardness_yes_oracle(x, x, params) == OracleVerdict::no);
}

TEST_CASE("hardness oracle guards") {
  CHECK_THROWS_AS(hardness_yes_oracle(BitString(8), BitString(8),
                                      toy_params(8, 0, 1, 7, 0, 2)),
                  GuardRefusal);
  CHECK_THROWS_AS(hardness_yes_oracle(BitString(8), BitString(8),
                                      toy_params(8, 0, 1, 4, 7, 6)),
                  GuardRefusal);
}

TEST_CASE("hardness finder basics") {
  RandomStream rng(3);
  CHECK(hardness_finder(BitString(), rng).size() == 0);
  RandomStream a(12), b(12);
  CHECK(hardness_finder(BitString(10), a) == hardness_finder(BitString(10), b));
}

TEST_CASE("hardness verifier agrees with the oracle on planted instances") {
  auto params = toy_params(8, 0, 1, 1, 0, 2);
  const BitString x = BitString::from_string("10110100");

  // no-instance: r = x (copier pair wins)
  REQUIRE(hardness_yes_oracle(x, x, params) == OracleVerdict::no);
  // yes-instance: a string far from anything the tiny machines can emit
  const BitString r_far = BitString::from_string("01101001");
  REQUIRE(hardness_yes_oracle(x, r_far, params) == OracleVerdict::yes);

  std::size_t no_rejects = 0, yes_accepts = 0;
  const std::size_t reps = 20;
  for (std::size_t i = 0; i < reps; ++i) {
    RandomStream rng_no(1000 + i);
    no_rejects += hardness_verifier(x, x, params, rng_no) == 0;
    RandomStream rng_yes(2000 + i);
    yes_accepts += hardness_verifier(x, r_far, params, rng_yes) == 1;
  }
  CHECK(no_rejects >= 19);
  CHECK(yes_accepts >= 19);

  // immediate rejection on length mismatch
  RandomStream rng(1);
  CHECK(hardness_verifier(x, BitString(7), params, rng) == 0);
}

TEST_CASE("bad-set census: function-level examples") {
  CensusPair zeros;
  zeros.label = "const0";
  zeros.attack_rand_bits = 0;
  zeros.leak = [](const BitString&, const BitString&) { return BitString(); };
  zeros.attack = [](const BitString& x, const BitString&, const BitString&) {
    return BitString(x.size());
  };
  const BitString x = BitString::from_string("110010");

  CHECK(random_is_hard_census(zeros, x, 0, 1) == 1);  // only r = 0^n
  CHECK(random_is_hard_census(zeros, x, 0, 0) == 0);  // empty event
  CHECK(random_is_hard_census(zeros, x, 0, 2) == 7);  // ball of radius 1 around 0^6
}

TEST_CASE("bad-set census matches the threaded run") {
  CensusPair copy;
  copy.label = "copy-x";
  copy.attack_rand_bits = 2;
  copy.leak = [](const BitString&, const BitString& r) {
    BitString w;
    w.push_back(r.bit(0));
    return w;
  };
  copy.attack = [](const BitString& x, const BitString&, const BitString& tape) {
    BitString y = x;
    y.set_bit(0, tape.bit(0));
    return y;
  };
  const BitString x = BitString::from_string("0111001010");
  const BigInt serial = random_is_hard_census(copy, x, 1, 2);
  CHECK(serial == random_is_hard_census(copy, x, 1, 2, 4));
}

TEST_CASE("bad-set inequality for all deterministic-leak machine pairs at n = 8") {
  const std::size_t n = 8;
  const BitString x = BitString::from_string("10110100");
  auto machines = distinct_machines(3);
  const TruncationBudget budget{64, 6};
  for (std::uint64_t ell : {std::uint64_t{0}, std::uint64_t{1}}) {
    for (std::uint64_t dist : {std::uint64_t{1}, std::uint64_t{2}}) {
      const BigInt bound = bad_set_bound(n, ell, dist);
      for (const auto& attacker : machines) {
        for (const auto& leak : machines) {
          auto pair = census_pair_from_machines(attacker, leak, budget, ell, 2);
          CHECK(random_is_hard_census(pair, x, ell, dist) <= bound);
        }
      }
    }
  }
}

TEST_CASE("exhaustive yes-census agrees with the oracle point-by-point") {
  auto params = toy_params(6, 0, 1, 2, 0, 2);
  const BitString x = BitString::from_string("101100");
  auto census = hardness_yes_census(x, params);
  CHECK(census.total == 64);

  std::uint64_t not_yes = 0, no = 0;
  for (std::uint64_t rv = 0; rv < 64; ++rv) {
    const auto verdict = hardness_yes_oracle(x, BitString::from_value(rv, 6), params);
    not_yes += verdict != OracleVerdict::yes;
    no += verdict == OracleVerdict::no;
  }
  CHECK(census.not_yes == not_yes);
  CHECK(census.no == no);

  // threaded variant agrees
  auto threaded = hardness_yes_census(x, params, 4);
  CHECK(threaded.not_yes == census.not_yes);
  CHECK(threaded.no == census.no);
}

TEST_CASE("finder failure stays under 1/3 where the union bound predicts it") {
  // n = 14, descriptions <= 2 bits, ell = 0, dist = 1: the exact-volume union
  // bound is 49 * 2*(2n)*vol(14,0) / 2^14 = 2744/16384 < 1/3, so the census
  // must come in under a third as well.
  auto params = toy_params(14, 0, 1, 2, 0, 2);
  const BitString x = BitString::from_string("10110100101101");
  const std::size_t desc_count = enumerate_machines(params.max_desc_bits).size();
  const BigInt pair_count = BigInt(desc_count) * desc_count;
  const BigRat union_bound =
      BigRat(pair_count * bad_set_bound(params.n, params.ell, params.dist),
             BigInt(1) << params.n);
  REQUIRE(union_bound < BigRat(1, 3));

  auto census = hardness_yes_census(x, params, 4);
  const BigRat fail_fraction(BigInt(census.not_yes), BigInt(census.total));
  CHECK(fail_fraction < BigRat(1, 3));
  CHECK(fail_fraction <= union_bound);

  // the finder draws uniform strings, so its failure probability IS that
  // fraction; spot-check it against the no-zone too
  CHECK(census.no <= census.not_yes);
}

TEST_CASE("identity problem: exhaustive promise checks") {
  auto p = identity_problem();
  const BitString x = BitString::from_string("1011");
  CHECK(p.yes(x, x));
  CHECK(p.no(x, BitString::from_string("1010")));
  CHECK(derandomized_verify(p, x, x) == 1);
  CHECK(derandomized_verify(p, x, BitString::from_string("0011")) == 0);
  CHECK(p.find(x, BitString()) == x);
}

TEST_CASE("agreement problem: verifier gap and finder success, exhaustively") {
  auto p = agreement_problem(2);
  const BitString x = BitString::from_string("10110110");  // n = 8, power of two
  const std::size_t n = x.size();

  // verifier acceptance probability equals the agreement fraction
  const std::size_t omega_bits = p.verifier_rand_len(n);
  REQUIRE(omega_bits == 3);
  auto acceptance = [&](const BitString& y) {
    std::size_t hits = 0;
    for (std::uint64_t w = 0; w < (1ULL << omega_bits); ++w)
      hits += p.verify(x, y, BitString::from_value(w, omega_bits));
    return BigRat(BigInt(hits), BigInt(1) << omega_bits);
  };
  CHECK(acceptance(x) == 1);
  BitString far = x;
  for (std::size_t i = 0; i < 6; ++i) far.set_bit(i, 1 - far.bit(i));
  REQUIRE(p.no(x, far));
  CHECK(acceptance(far) <= BigRat(1, 3));

  // finder: flips at most its two coin positions, so exhaustive success >= 2/3
  std::size_t good = 0;
  for (std::uint64_t g = 0; g < 4; ++g)
    good += p.yes(x, p.find(x, BitString::from_value(g, 2)));
  CHECK(good == 4);  // flipping <= 2 of 8 bits keeps agreement >= 2/3
}

TEST_CASE("needle problem: witnesses and the complement no-zone") {
  auto p = needle_problem();
  const BitString x = BitString::from_string("0110");
  BitString complement = x;
  for (std::size_t i = 0; i < x.size(); ++i) complement.set_bit(i, 1 - x.bit(i));
  CHECK(p.no(x, complement));
  CHECK(p.yes(x, x));
  CHECK(derandomized_verify(p, x, complement) == 0);
  CHECK(derandomized_verify(p, x, x) == 1);
  // finder copies its coins; success = 1 - 2^-n over exhaustive coins
  std::size_t good = 0;
  for (std::uint64_t g = 0; g < 16; ++g)
    good += p.yes(x, p.find(x, BitString::from_value(g, 4)));
  CHECK(good == 15);
}

TEST_CASE("hardness relation packaged as a search problem") {
  auto params = toy_params(8, 0, 1, 1, 0, 2);
  auto p = hardness_search_problem(params);
  const BitString x = BitString::from_string("10110100");
  CHECK(p.finder_rand_len(8) == 8);
  const BitString gamma = BitString::from_string("01101001");
  CHECK(p.find(x, gamma) == gamma);
  CHECK(p.no(x, x));        // copier pair
  CHECK(p.yes(x, gamma));   // far from every tiny machine's output
  // verify consumes a 64-bit omega as its stream seed
  RandomStream omega_src(77);
  const BitString omega = omega_src.next_bits(64);
  CHECK(p.verify(x, gamma, omega) == 1);
  CHECK(p.verify(x, x, omega) == 0);
}
