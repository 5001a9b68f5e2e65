// Acceptance suite: twelve checks, one pass/fail line each. Every expected
// value is either exact (big-integer / rational arithmetic, exhaustive
// enumeration) or measured against an explicitly sized confidence bound; no
// tolerance is calibrated after the fact.
//
// The CLI reproducibility check (A12) shells out to the driver named by the
// NWLAB_BIN environment variable (ctest sets it; set it by hand when running
// this binary directly).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include "nwlab/adversary.hpp"
#include "nwlab/counting.hpp"
#include "nwlab/derand.hpp"
#include "nwlab/machine.hpp"
#include "nwlab/searchprob.hpp"

using namespace nwlab;

namespace {

struct Criterion {
  std::string id;
  std::string summary;
  bool pass = false;
  std::string note;
  double seconds = 0.0;
};

std::vector<Criterion> g_results;

void report(const std::string& id, const std::string& summary,
            const std::function<bool(std::string&)>& body) {
  Criterion c;
  c.id = id;
  c.summary = summary;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.pass = body(c.note);
  } catch (const std::exception& err) {
    c.pass = false;
    c.note = std::string("exception: ") + err.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << "[" << c.id << "] " << (c.pass ? "PASS" : "FAIL") << "  " << c.summary;
  if (!c.note.empty()) line << " -- " << c.note;
  line << "  (" << c.seconds << "s)";
  std::cout << line.str() << std::endl;
  g_results.push_back(std::move(c));
}

unsigned worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : std::min(hw, 8u);
}

// ---------------------------------------------------------------- A1

bool a1_design_validity(std::string& note) {
  std::size_t cases = 0;
  // greedy grid
  for (std::size_t d = 4; d <= 16; ++d)
    for (std::size_t r = 2; r <= 4 && r < d; ++r)
      for (std::size_t s = 0; s < r; ++s)
        for (std::size_t m : {std::size_t{1}, std::size_t{3}, std::size_t{8}}) {
          auto g = gen_design_greedy(d, r, s, m);
          if (!verify_design(g.design).valid) return false;
          ++cases;
        }
  // coupled parameterization, integral grids up to d = 64
  struct Km {
    BigRat alpha;
    std::size_t step;
  };
  for (const Km& km : {Km{BigRat(1, 3), 9}, Km{BigRat(1, 4), 8}, Km{BigRat(2, 5), 25}}) {
    for (std::size_t d = km.step; d <= 64; d += km.step) {
      auto out = gen_design_km(d, km.alpha);
      if (out.rounded) return false;
      if (!verify_design(out.design).valid) return false;
      if (!out.meets_floor()) return false;
      ++cases;
    }
  }
  // polynomial construction
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    for (std::size_t degree = 0; degree < 3 && degree < p; ++degree) {
      const BigInt limit = ipow(BigInt(p), degree + 1);
      const std::size_t m = limit > 30 ? 30 : static_cast<std::size_t>(limit);
      auto design = design_from_polynomials(p, degree, m);
      if (!verify_design(design).valid) return false;
      ++cases;
    }
  }
  note = std::to_string(cases) + " cases";
  return cases >= 200;
}

// ---------------------------------------------------------------- A2

bool a2_padding(std::string& note) {
  std::size_t cases = 0;
  for (std::size_t len = 0; len <= 12; ++len) {
    for (std::uint64_t v = 0; v < (1ULL << len); ++v) {
      const BitString x = BitString::from_value(v, len);
      for (std::size_t k = 0; k <= 40; ++k) {
        const PaddedString padded = pad(x, k);
        if (padded.raw.size() != std::max(2 * len, k)) return false;
        if (padded.raw.size() < k) return false;
        if (unpad(padded.raw) != x) return false;
        ++cases;
      }
    }
  }
  note = std::to_string(cases) + " cases";
  return true;
}

// ---------------------------------------------------------------- A3

bool a3_telescoping(std::string& note) {
  RandomStream master(0xA3);
  std::size_t instances = 0;
  while (instances < 50) {
    const std::size_t m = 2 + static_cast<std::size_t>(master.next_below(7));   // 2..8
    const std::size_t d = 5 + static_cast<std::size_t>(master.next_below(6));   // 5..10
    const std::size_t r = 2, n = 4;
    auto greedy = gen_design_greedy(d, r, 1, m);
    if (!greedy.complete()) continue;
    const BitString z = master.next_bits(n);
    ToyParams params{m, n, d, r, 1};
    auto prg = make_prg(greedy.design, table_oracle(z), params);
    const BitString x = z;

    const BitString table = master.next_bits(8);
    const int b = static_cast<int>(master.next_below(2));
    auto decide = [&table](const BitString& cand) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < 3; ++i)
        idx = (idx << 1) | static_cast<std::size_t>(i < cand.size() ? cand.bit(i) : 0);
      return table.bit(idx);
    };

    // P[D(H_j) = b] for j = 0..m by full (seed, fill) enumeration
    std::vector<BigRat> prob(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      std::uint64_t hits = 0;
      const std::uint64_t seeds = 1ULL << d, fills = 1ULL << (m - j);
      for (std::uint64_t sv = 0; sv < seeds; ++sv) {
        const BitString s = BitString::from_value(sv, d);
        for (std::uint64_t fv = 0; fv < fills; ++fv) {
          const BitString cand = hybrid_sample(prg, x, j, s, BitString::from_value(fv, m - j));
          hits += decide(cand) == b;
        }
      }
      prob[j] = BigRat(BigInt(hits), BigInt(seeds) * BigInt(fills));
    }

    BigRat sum = 0;
    for (std::size_t j = 1; j <= m; ++j) sum += prob[j] - prob[j - 1];
    if (sum != prob[m] - prob[0]) return false;
    ++instances;
  }
  note = "50 instances, exact rational identity";
  return true;
}

// ---------------------------------------------------------------- A4

bool a4_predictor_census(std::string& note) {
  std::vector<TargetedPRG> prgs;
  for (std::size_t d : {8u, 10u}) {
    for (std::uint64_t key : {11ull, 42ull, 77ull}) {
      auto greedy = gen_design_greedy(d, 4, 2, 4);
      if (!greedy.complete()) return false;
      ToyParams params{4, 16, d, 4, 2};
      prgs.push_back(make_prg(greedy.design, seeded_oracle(key), params));
    }
  }

  RandomStream master(0xA4);
  std::vector<Distinguisher> candidates;
  {
    Distinguisher bit0;
    bit0.label = "bit0";
    bit0.decide = [](std::size_t, const BitString&, const BitString& c, const BitString&) {
      return c.bit(0);
    };
    candidates.push_back(bit0);
    Distinguisher bit2;
    bit2.label = "bit2";
    bit2.decide = [](std::size_t, const BitString&, const BitString& c, const BitString&) {
      return c.bit(2);
    };
    candidates.push_back(bit2);
    for (int i = 0; i < 2; ++i) {
      const BitString table = master.next_bits(4);
      Distinguisher lut;
      lut.label = "lut2-" + std::to_string(i);
      lut.decide = [table](std::size_t, const BitString&, const BitString& c,
                           const BitString&) {
        return table.bit(static_cast<std::size_t>(c.bit(0)) * 2 +
                         static_cast<std::size_t>(c.bit(1)));
      };
      candidates.push_back(lut);
    }
  }

  std::size_t planted = 0;
  const BitString x = RandomStream(0x5EED).next_bits(16);
  for (const auto& prg : prgs) {
    for (const auto& D : candidates) {
      auto rep = attack_success_census(D, prg, x, 1);
      if (rep.advantage.beta == 0) continue;  // needs beta > 0 to count
      if (!rep.pass) return false;            // fraction >= beta/(8m), exact
      ++planted;
    }
  }
  note = std::to_string(planted) + " planted instances with beta > 0";
  return planted >= 10;
}

// ---------------------------------------------------------------- A5

bool a5_leak_length_identity(std::string& note) {
  for (const BigRat& alpha : {BigRat(1, 3), BigRat(1, 4), BigRat(1, 5)}) {
    for (int log2n : {135, 270, 405}) {
      auto id = leak_length_exponent_identity(alpha, BigRat(log2n));
      if (!id.holds) return false;
      if (id.lhs != id.rhs) return false;
    }
  }
  const BigRat eps_third = 2 * BigRat(1, 3) + BigRat(1, 3) * BigRat(1, 3) * BigRat(1, 3) / 5;
  if (!(eps_third < 1)) return false;
  note = "9 grid points exact; epsilon(1/3) = " + rat_to_string(eps_third) + " < 1";
  return true;
}

// ---------------------------------------------------------------- A6

bool a6_bad_set_counting(std::string& note) {
  // distinct machines among all descriptions of length <= 4
  std::vector<Machine> machines;
  {
    std::vector<std::string> seen;
    for (const auto& desc : enumerate_machines(4)) {
      Machine m = decode(desc.bits);
      const std::string key = machine_table_key(m);
      bool fresh = true;
      for (const auto& k : seen) fresh = fresh && k != key;
      if (fresh) {
        seen.push_back(key);
        machines.push_back(std::move(m));
      }
    }
  }

  std::size_t checks = 0;
  for (std::size_t n : {6u, 8u, 10u}) {
    BitString x(n);
    for (std::size_t i = 0; i < n; i += 2) x.set_bit(i, 1);
    const TruncationBudget budget{n * n, 2 * ceil_log2(BigInt(n))};
    std::vector<std::uint64_t> dists = {1, n / 4};
    if (dists[1] <= 1) dists.pop_back();
    for (std::uint64_t ell : {0ull, 1ull, 2ull}) {
      for (std::uint64_t dist : dists) {
        const BigInt bound = bad_set_bound(n, ell, dist);
        for (const auto& attacker : machines) {
          for (const auto& leak : machines) {
            auto pair = census_pair_from_machines(attacker, leak, budget, ell, 4);
            if (random_is_hard_census(pair, x, ell, dist) > bound) return false;
            ++checks;
          }
        }
      }
    }
  }
  note = std::to_string(checks) + " pair/parameter checks, zero violations (" +
         std::to_string(machines.size()) + " distinct machines)";
  return true;
}

// ---------------------------------------------------------------- A7

bool a7_entropy_bound(std::string& note) {
  std::size_t checks = 0;
  for (std::size_t n = 2; n <= 24; ++n) {
    for (std::size_t radius = 1; 2 * radius <= n; ++radius) {
      const double exponent =
          static_cast<double>(n) *
          binary_entropy(static_cast<double>(radius) / static_cast<double>(n));
      if (std::log2(static_cast<double>(hamming_ball_volume(n, radius))) >
          exponent + 1e-9)
        return false;
      ++checks;
    }
  }
  note = std::to_string(checks) + " (n, radius) points";
  return true;
}

// ---------------------------------------------------------------- A8

bool a8_decision_derandomizer(std::string& note) {
  // Fixture family: OR/AND coin gates selected by a predicate of x, so every
  // input is a promise input with acceptance exactly 1 - 2^-arity or 2^-arity.
  // Balanced tables over a disjoint design give exactly uniform pseudorandom
  // coins (single-set marginals are exact halves, disjoint sets make them
  // independent), so those fixtures meet the advantage premise with room to
  // spare; overlapping-design fixtures are kept only when the computed
  // advantage stays under 1/6.
  struct FixtureSpec {
    std::uint64_t key;
    bool balanced;
    std::size_t d;
    std::size_t arity;
    std::string pred_name;
  };
  std::vector<FixtureSpec> specs;
  for (std::uint64_t key : {1ull, 2ull, 3ull, 5ull, 8ull})
    for (std::size_t arity : {2u, 3u})
      for (const char* pred : {"parity", "first_bit"})
        specs.push_back({key, true, 16, arity, pred});
  for (std::uint64_t key : {21ull, 22ull, 23ull, 24ull})
    specs.push_back({key, false, 10, 2, "parity"});

  std::size_t fixtures_ok = 0, inputs_checked = 0;
  for (const auto& spec : specs) {
    auto greedy = spec.balanced ? gen_design_greedy(16, 4, 0, 4)
                                : gen_design_greedy(spec.d, 4, 2, 4);
    ToyParams params{4, 16, spec.balanced ? 16 : spec.d, 4,
                     spec.balanced ? std::size_t{0} : std::size_t{2}};
    auto prg = make_prg(greedy.design,
                        spec.balanced ? balanced_oracle(spec.key) : seeded_oracle(spec.key),
                        params);

    const std::string pred_name = spec.pred_name;
    auto pred = [pred_name](const BitString& x) {
      return pred_name == "parity" ? x.popcount() % 2 == 1
                                   : (x.size() > 0 && x.bit(0) == 1);
    };
    RandomizedDecider M;
    M.label = pred_name + "-gate" + std::to_string(spec.arity);
    M.rand_bits = spec.arity;
    const std::size_t arity = spec.arity;
    M.decide = [pred, arity](const BitString& x, const BitString& gamma) {
      bool any = false, all = true;
      for (std::size_t i = 0; i < arity; ++i) {
        const bool b = gamma.bit(i) == 1;
        any = any || b;
        all = all && b;
      }
      return pred(x) ? (any ? 1 : 0) : (all ? 1 : 0);
    };
    auto D = induced_decision_distinguisher(M);

    bool fixture_in_premise = true;
    for (std::uint64_t xv = 0; xv < 16 && fixture_in_premise; ++xv) {
      const BitString x = BitString::from_value(xv, 4);
      // exhaustive promise check over the decider's coins
      std::size_t accepts = 0;
      for (std::uint64_t g = 0; g < (1ULL << arity); ++g)
        accepts += M.decide(x, BitString::from_value(g, arity));
      const std::size_t total = 1ULL << arity;
      if (pred(x) ? accepts != total - 1 : accepts != 1) return false;

      auto adv = exact_advantage(D, prg, pad(x, 16).raw);
      if (!(adv.beta < BigRat(1, 6))) fixture_in_premise = false;
    }
    if (!fixture_in_premise) continue;

    for (std::uint64_t xv = 0; xv < 16; ++xv) {
      const BitString x = BitString::from_value(xv, 4);
      if (derandomize_decision(M, prg, x, 16) != (pred(x) ? 1 : 0)) return false;
      ++inputs_checked;
    }
    ++fixtures_ok;
  }
  note = std::to_string(fixtures_ok) + " fixtures in premise, " +
         std::to_string(inputs_checked) + " promise inputs, all matched";
  return fixtures_ok >= 20;
}

// ---------------------------------------------------------------- A9

bool a9_search_derandomizer(std::string& note) {
  struct Fixture {
    SearchProblem problem;
    BitString x;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({identity_problem(), BitString::from_string("1011")});
  fixtures.push_back({identity_problem(), BitString::from_string("0000")});
  fixtures.push_back({agreement_problem(2), BitString::from_string("10110110")});
  fixtures.push_back({agreement_problem(2), BitString::from_string("00011011")});
  fixtures.push_back({agreement_problem(1), BitString::from_string("1100")});
  fixtures.push_back({agreement_problem(1), BitString::from_string("0111")});
  fixtures.push_back({needle_problem(), BitString::from_string("1010")});
  fixtures.push_back({needle_problem(), BitString::from_string("0110")});
  fixtures.push_back({needle_problem(), BitString::from_string("1111")});
  fixtures.push_back({needle_problem(), BitString::from_string("0001")});

  std::size_t idx = 0, checked = 0;
  for (const auto& fixture : fixtures) {
    const std::size_t d = idx % 2 == 0 ? 8 : 10;
    const std::uint64_t key = 100 + idx;
    auto greedy = gen_design_greedy(d, 4, 2, 4);
    ToyParams params{4, 16, d, 4, 2};
    auto prg = make_prg(greedy.design, seeded_oracle(key), params);
    ++idx;

    const BitString& x = fixture.x;
    const SearchProblem& problem = fixture.problem;

    // premise 1: x in S_R (a yes-witness exists; x itself works here)
    if (!problem.yes(x, x)) return false;
    // premise 2: exhaustive finder success >= 2/3
    const std::size_t t = problem.finder_rand_len(x.size());
    std::uint64_t good = 0;
    for (std::uint64_t g = 0; g < (1ULL << t); ++g)
      good += problem.yes(x, problem.find(x, BitString::from_value(g, t)));
    if (3 * good < 2 * (1ULL << t)) return false;
    // premise 3: induced-distinguisher advantage < 2/3
    auto adv = exact_advantage(induced_search_distinguisher(problem), prg, pad(x, 16).raw);
    if (!(adv.beta < BigRat(2, 3))) return false;

    auto outcome = derandomize_search(problem, prg, x, 16);
    if (!outcome.found) return false;
    if (derandomized_verify(problem, x, outcome.witness) != 1) return false;
    if (problem.no(x, outcome.witness)) return false;  // non-no, cross-checked
    ++checked;
  }
  note = std::to_string(checked) + " fixtures, every witness verifier-accepted and non-no";
  return checked == fixtures.size();
}

// ---------------------------------------------------------------- A10

bool a10_verifier_vs_oracle(std::string& note) {
  HardnessProblemParams params;
  params.n = 8;
  params.ell = 1;
  params.dist = 2;
  params.max_desc_bits = 4;
  params.leak_rand_bits = 0;
  params.attack_rand_bits = 6;  // 64 paths: fractional success probabilities exist

  const BitString x = BitString::from_string("10110100");

  // candidate targets: machine-reachable strings and their neighborhoods
  // (borderline instances), plus a stream of uniform ones
  std::vector<BitString> candidates;
  candidates.push_back(x);
  candidates.push_back(BitString(8));
  candidates.push_back(BitString::from_string("11111111"));
  candidates.push_back(BitString::from_string("01001011"));
  for (std::size_t flip = 0; flip < 8; flip += 3) {
    BitString near = x;
    near.set_bit(flip, 1 - near.bit(flip));
    candidates.push_back(near);
    BitString near_zero(8);
    near_zero.set_bit(flip, 1);
    candidates.push_back(near_zero);
  }
  RandomStream gen(0xA10);
  while (candidates.size() < 64) candidates.push_back(gen.next_bits(8));

  struct Instance {
    BitString r;
    OracleVerdict verdict;
  };
  std::vector<Instance> instances;
  std::size_t yes_count = 0, no_count = 0;
  for (const auto& r : candidates) {
    if (instances.size() >= 40) break;
    const auto verdict = hardness_yes_oracle(x, r, params);
    if (verdict == OracleVerdict::neither) continue;
    (verdict == OracleVerdict::yes ? yes_count : no_count)++;
    instances.push_back({r, verdict});
  }
  if (instances.size() < 40) return false;

  // 100 repetitions per instance; instances are sliced across workers, seeds
  // depend only on (instance, repetition), so the schedule cannot matter
  const std::size_t reps = 100;
  const unsigned workers = worker_threads();
  std::vector<std::size_t> agreement(instances.size(), 0);
  std::vector<std::thread> pool;
  for (unsigned wk = 0; wk < workers; ++wk) {
    pool.emplace_back([&, wk]() {
      for (std::size_t i = wk; i < instances.size(); i += workers) {
        std::size_t agree = 0;
        for (std::size_t rep = 0; rep < reps; ++rep) {
          RandomStream rng(0xA10000 + i * 1000 + rep);
          const int accept = hardness_verifier(x, instances[i].r, params, rng);
          agree += accept == (instances[i].verdict == OracleVerdict::yes ? 1 : 0);
        }
        agreement[i] = agree;
      }
    });
  }
  for (auto& th : pool) th.join();

  std::size_t worst = reps;
  for (std::size_t a : agreement) worst = std::min(worst, a);
  note = std::to_string(instances.size()) + " instances (" + std::to_string(yes_count) +
         " yes / " + std::to_string(no_count) + " no), worst agreement " +
         std::to_string(worst) + "/100";
  return worst >= 95;
}

// ---------------------------------------------------------------- A11

bool a11_finder_failure_census(std::string& note) {
  HardnessProblemParams params;
  params.n = 10;
  params.ell = 1;
  params.dist = 2;
  params.max_desc_bits = 3;
  params.leak_rand_bits = 0;
  params.attack_rand_bits = 4;

  const BitString x = BitString::from_string("1011010011");
  auto census = hardness_yes_census(x, params, worker_threads());

  const std::size_t desc_count = enumerate_machines(params.max_desc_bits).size();
  const BigInt pair_count = BigInt(desc_count) * desc_count;
  const BigRat union_bound(pair_count * bad_set_bound(params.n, params.ell, params.dist),
                           BigInt(1) << params.n);
  const BigRat fraction(BigInt(census.not_yes), BigInt(census.total));

  note = "fail fraction " + std::to_string(census.not_yes) + "/" +
         std::to_string(census.total) + ", union bound " + rat_to_string(union_bound);
  return fraction < BigRat(1, 3) && fraction <= union_bound;
}

// ---------------------------------------------------------------- A12

bool a12_reproducibility(std::string& note) {
  const char* bin = std::getenv("NWLAB_BIN");
  if (bin == nullptr) {
    note = "NWLAB_BIN not set";
    return false;
  }
  const std::string scratch = "acceptance_scratch";
  std::filesystem::create_directories(scratch);

  auto write_file = [&](const std::string& name, const std::string& body) {
    std::ofstream out(scratch + "/" + name, std::ios::binary);
    out << body;
  };
  write_file("badset.json", R"({"n": 12, "ell": 2, "dist": 3})");
  write_file("gen.json", R"({"method": "greedy", "d": 10, "r": 3, "s": 1, "m_target": 8})");
  write_file("census.json", R"({
    "prg": {
      "design": {"d": 8, "r": 4, "s": 2, "sets": [[0,1,2,3],[0,1,4,5],[0,2,4,6],[0,3,4,7]]},
      "oracle": "seeded:42",
      "params": {"m": 4, "n": 16, "d": 8, "r": 4}
    },
    "distinguisher": {"kind": "first_bit"},
    "target": "1011010010110100"
  })");
  write_file("enum.json", "{}");

  struct Job {
    std::string args;
    std::string name;
  };
  const std::vector<Job> jobs = {
      {"lemma badset --config " + scratch + "/badset.json", "badset"},
      {"design gen --config " + scratch + "/gen.json", "gen"},
      {"attack census --config " + scratch + "/census.json", "census"},
      {"prg enumerate --design " + scratch + "/d.json --oracle seeded:9 --target 0110100101101001",
       "enum"},
  };
  write_file("d.json",
             R"({"d": 8, "r": 4, "s": 2, "sets": [[0,1,2,3],[0,1,4,5],[0,2,4,6],[0,3,4,7]]})");

  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  for (const auto& job : jobs) {
    const std::string out1 = scratch + "/" + job.name + ".1";
    const std::string out2 = scratch + "/" + job.name + ".2";
    const std::string cmd1 = std::string(bin) + " " + job.args + " --out " + out1;
    const std::string cmd2 = std::string(bin) + " " + job.args + " --out " + out2;
    if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0) {
      note = "driver failed on " + job.name;
      return false;
    }
    const std::string b1 = slurp(out1), b2 = slurp(out2);
    if (b1.empty() || b1 != b2) {
      note = "report bytes differ for " + job.name;
      return false;
    }
  }
  note = std::to_string(jobs.size()) + " configs, byte-identical reports";
  return true;
}

}  // namespace

int main() {
  report("A1", "every generated design verifies; size floors met", a1_design_validity);
  report("A2", "padding round-trip and length floor, exhaustive", a2_padding);
  report("A3", "hybrid telescoping identity, exact rationals", a3_telescoping);
  report("A4", "predictor census beats beta/(8m) on planted instances", a4_predictor_census);
  report("A5", "leakage-length exponent identity on the (alpha, log n) grid",
         a5_leak_length_identity);
  report("A6", "bad-set census bounded by 2^(l+1)*2n*vol for all tiny pairs",
         a6_bad_set_counting);
  report("A7", "ball volume <= 2^(n H(r/n))", a7_entropy_bound);
  report("A8", "decision derandomizer matches promise answers", a8_decision_derandomizer);
  report("A9", "search derandomizer returns verifier-accepted non-no witnesses",
         a9_search_derandomizer);
  report("A10", "sampling verifier agrees with the exact oracle", a10_verifier_vs_oracle);
  report("A11", "finder failure fraction under 1/3 and the union bound",
         a11_finder_failure_census);
  report("A12", "CLI reports byte-identical across runs", a12_reproducibility);

  std::size_t passed = 0;
  for (const auto& c : g_results) passed += c.pass;
  std::cout << passed << "/" << g_results.size() << " acceptance criteria passed"
            << std::endl;
  return passed == g_results.size() ? 0 : 1;
}
