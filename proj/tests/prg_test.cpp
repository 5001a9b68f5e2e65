#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nwlab/prg.hpp"
#include "nwlab/random_stream.hpp"

using namespace nwlab;

namespace {

Design two_sets_design() {
  Design d;
  d.d = 3;
  d.r = 2;
  d.s = 1;
  d.sets = {{0, 1}, {1, 2}};
  return d;
}

TargetedPRG small_prg(const BitString& table) {
  ToyParams params{/*m=*/2, /*n=*/4, /*d=*/3, /*r=*/2, /*s_overlap=*/1};
  return make_prg(two_sets_design(), table_oracle(table), params);
}

}  // namespace

TEST_CASE("expand hand example") {
  auto prg = small_prg(BitString::from_string("0110"));
  const BitString x = BitString::from_string("0110");
  CHECK(expand(prg, x, BitString::from_string("101")).to_string() == "11");
  CHECK(expand(prg, x, BitString::from_string("000")).to_string() == "00");
}

TEST_CASE("constant table gives constant outputs") {
  auto prg = small_prg(BitString::from_string("0000"));
  const BitString x = BitString::from_string("0000");
  for (std::uint64_t v = 0; v < 8; ++v)
    CHECK(expand(prg, x, BitString::from_value(v, 3)).to_string() == "00");
}

TEST_CASE("construction validates the wiring, expand never configuration-fails") {
  ToyParams bad_n{2, 5, 3, 2, 1};  // 5 != 2^2
  CHECK_THROWS_AS(make_prg(two_sets_design(), constant_oracle(0), bad_n), std::domain_error);

  ToyParams too_many{3, 4, 3, 2, 1};  // m > sets
  CHECK_THROWS_AS(make_prg(two_sets_design(), constant_oracle(0), too_many),
                  std::domain_error);

  ToyParams wrong_r{2, 8, 3, 3, 1};  // design.r mismatch
  CHECK_THROWS_AS(make_prg(two_sets_design(), constant_oracle(0), wrong_r),
                  std::domain_error);
}

TEST_CASE("expand rejects wrong lengths") {
  auto prg = small_prg(BitString::from_string("0110"));
  CHECK_THROWS_AS(expand(prg, BitString::from_string("01"), BitString::from_string("000")),
                  std::invalid_argument);
  CHECK_THROWS_AS(expand(prg, BitString::from_string("0110"), BitString::from_string("00")),
                  std::invalid_argument);
}

TEST_CASE("bit consistency: expand agrees with direct recomputation") {
  RandomStream rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto greedy = gen_design_greedy(6, 3, 2, 4);
    REQUIRE(greedy.complete());
    ToyParams params{4, 8, 6, 3, 2};
    const BitString table = rng.next_bits(8);
    auto prg = make_prg(greedy.design, table_oracle(table), params);
    const BitString x = rng.next_bits(8);
    const BitString seed = rng.next_bits(6);
    const BitString out = expand(prg, x, seed);
    for (std::size_t j = 0; j < params.m; ++j) {
      const BitString restricted = seed.restricted(prg.design.sets[j]);
      CHECK(out.bit(j) == table.bit(static_cast<std::size_t>(restricted.to_value())));
    }
  }
}

TEST_CASE("bit consistency holds exhaustively over a full seed space") {
  auto greedy = gen_design_greedy(8, 3, 2, 5);
  REQUIRE(greedy.complete());
  ToyParams params{5, 8, 8, 3, 2};
  const BitString table = BitString::from_string("01101001");
  auto prg = make_prg(greedy.design, table_oracle(table), params);
  const BitString x = table;
  for (std::uint64_t v = 0; v < 256; ++v) {
    const BitString seed = BitString::from_value(v, 8);
    const BitString out = expand(prg, x, seed);
    REQUIRE(out.size() == params.m);
    for (std::size_t j = 0; j < params.m; ++j) {
      const BitString restricted = seed.restricted(prg.design.sets[j]);
      CHECK(out.bit(j) == table.bit(static_cast<std::size_t>(restricted.to_value())));
    }
  }
}

TEST_CASE("outputs change exactly where the tables disagree at indexed positions") {
  auto greedy = gen_design_greedy(6, 3, 2, 4);
  REQUIRE(greedy.complete());
  ToyParams params{4, 8, 6, 3, 2};
  const BitString z1 = BitString::from_string("01101001");
  const BitString z2 = BitString::from_string("01001011");
  auto prg1 = make_prg(greedy.design, table_oracle(z1), params);
  auto prg2 = make_prg(greedy.design, table_oracle(z2), params);
  RandomStream rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const BitString seed = rng.next_bits(6);
    const BitString out1 = expand(prg1, z1, seed);
    const BitString out2 = expand(prg2, z2, seed);
    for (std::size_t j = 0; j < params.m; ++j) {
      const auto idx = static_cast<std::size_t>(seed_index(prg1.design, j, seed));
      CHECK((out1.bit(j) != out2.bit(j)) == (z1.bit(idx) != z2.bit(idx)));
    }
  }
}

TEST_CASE("enumerate_outputs covers the seed space in lexicographic order") {
  auto prg = small_prg(BitString::from_string("0110"));
  const BitString x = BitString::from_string("0110");
  auto rows = enumerate_outputs(prg, x);
  REQUIRE(rows.size() == 8);
  for (std::uint64_t v = 0; v < 8; ++v) {
    CHECK(rows[v].first == BitString::from_value(v, 3));
    CHECK(rows[v].second == expand(prg, x, rows[v].first));
  }
  // outputs are a pure function of (table, design, seed): same x twice agrees
  auto rows2 = enumerate_outputs(prg, x);
  CHECK(rows == rows2);
}

TEST_CASE("enumerate_outputs refuses oversized seed spaces") {
  Design d;
  d.d = 30;
  d.r = 2;
  d.s = 1;
  d.sets = {{0, 1}, {1, 2}};
  ToyParams params{2, 4, 30, 2, 1};
  auto prg = make_prg(d, constant_oracle(0), params);
  BitString x(4);
  CHECK_THROWS_AS(enumerate_outputs(prg, x), GuardRefusal);
}

TEST_CASE("coupled parameter derivation at m = 2, alpha = 1/3") {
  auto p = derive_coupled_params(2, BigRat(1, 3), 3);
  CHECK(p.n_exponent == 135);  // 5/alpha^3
  CHECK_FALSE(p.exponent_rounded);
  CHECK(p.n == ipow(BigInt(2), 135));
  CHECK(p.r == 135);
  CHECK(p.d == 405);
  CHECK(p.s_overlap == 90);
  CHECK(p.epsilon == BigRat(91, 135));  // 2/3 + 1/135
  CHECK(p.epsilon < 1);
  CHECK(p.ell == ipow(BigInt(2), 91));
  CHECK(p.dist_threshold == ipow(BigInt(2), 133));  // (1/2 - 1/4) * 2^135
  CHECK(p.beyond_toy_scale);
  CHECK(p.design_size_floor >= BigInt(p.m));  // the size coupling holds here
  CHECK(p.c1 >= 1);
  CHECK(p.c2 >= 1);
}

TEST_CASE("coupled parameter derivation records exponent rounding") {
  auto p = derive_coupled_params(2, BigRat(2, 5), 3);
  CHECK(p.exponent_rounded);            // 5/alpha^3 = 625/8
  CHECK(p.n_exponent == 79);            // ceil
  CHECK(p.n == ipow(BigInt(2), 79));
  CHECK_THROWS_AS(derive_coupled_params(1, BigRat(1, 3), 3), std::domain_error);
  CHECK_THROWS_AS(derive_coupled_params(4, BigRat(3, 2), 3), std::domain_error);
}

TEST_CASE("coupled params convert to toy params only at desk scale") {
  auto p = derive_coupled_params(2, BigRat(1, 3), 3);
  CHECK_THROWS_AS(toy_from_coupled(p), std::domain_error);
}
