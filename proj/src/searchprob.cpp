#include "nwlab/searchprob.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace nwlab {

int derandomized_verify(const SearchProblem& problem, const BitString& x,
                        const BitString& y) {
  const std::size_t bits = problem.verifier_rand_len(x.size());
  if (bits > 20)
    throw GuardRefusal("derandomized_verify: verifier randomness over 20 bits");
  const std::uint64_t total = 1ULL << bits;
  std::uint64_t accepts = 0;
  for (std::uint64_t v = 0; v < total; ++v)
    accepts += problem.verify(x, y, BitString::from_value(v, bits)) & 1;
  return accepts * 2 > total ? 1 : 0;
}

TruncationBudget budget_for(const HardnessProblemParams& params) {
  if (params.n < 2) throw std::domain_error("budget_for: n must be >= 2");
  TruncationBudget b;
  b.max_steps = 1;
  for (unsigned i = 0; i < params.c1; ++i) b.max_steps *= params.n;
  b.max_work_cells = params.c2 * ceil_log2(BigInt(params.n));
  return b;
}

std::size_t chernoff_samples(double gap, double failure_prob) {
  if (!(gap > 0.0 && gap < 1.0))
    throw std::domain_error("chernoff_samples: gap must lie in (0,1)");
  if (!(failure_prob > 0.0 && failure_prob < 1.0))
    throw std::domain_error("chernoff_samples: failure_prob must lie in (0,1)");
  const double count = std::ceil(2.0 * std::log(2.0 / failure_prob) / (gap * gap));
  return count < 1.0 ? 1 : static_cast<std::size_t>(count);
}

namespace {

struct PairEnumeration {
  std::vector<MachineDescription> descs;
  std::vector<std::size_t> machine_of_desc;
  std::vector<Machine> machines;  // distinct decoded tables
};

PairEnumeration build_enumeration(std::size_t max_desc_bits) {
  PairEnumeration en;
  en.descs = enumerate_machines(max_desc_bits);
  std::unordered_map<std::string, std::size_t> ids;
  en.machine_of_desc.reserve(en.descs.size());
  for (const auto& d : en.descs) {
    Machine mach = decode(d.bits);
    const std::string key = machine_table_key(mach);
    auto it = ids.find(key);
    if (it == ids.end()) {
      ids.emplace(key, en.machines.size());
      en.machine_of_desc.push_back(en.machines.size());
      en.machines.push_back(std::move(mach));
    } else {
      en.machine_of_desc.push_back(it->second);
    }
  }
  return en;
}

// Attacker guesses are compared as packed words; -1 marks an unusable run
// (truncated or not exactly n bits).
std::int64_t packed_guess(const RunOutcome& outcome, std::size_t n) {
  if (outcome.status != RunStatus::halted || outcome.output.size() != n) return -1;
  return static_cast<std::int64_t>(outcome.output.to_value());
}

// Per-call run caches shared by the oracle, the verifier and the exhaustive
// census. Everything is keyed by distinct machine id; attacker runs are also
// keyed by the leaked string, which collapses hard (|w| <= ell keeps the key
// space tiny).
struct RunCaches {
  const PairEnumeration& en;
  const BitString& x;
  TruncationBudget budget;
  std::size_t n;
  std::uint64_t ell;
  std::size_t leak_rand_bits;
  std::size_t attack_rand_bits;

  // leak outputs for the current r: [leak_id][tape]
  std::vector<std::vector<BitString>> leak_w;
  // attacker guesses: (attacker_id, w) -> packed guess per tape
  std::map<std::pair<std::size_t, std::string>, std::vector<std::int64_t>> attack_memo;

  void fill_leaks(const BitString& r) {
    const std::size_t tapes = std::size_t{1} << leak_rand_bits;
    const BitString input = concat(x, r);
    leak_w.assign(en.machines.size(), {});
    for (std::size_t l = 0; l < en.machines.size(); ++l) {
      leak_w[l].reserve(tapes);
      for (std::uint64_t t = 0; t < tapes; ++t) {
        RunOutcome out = run_with_tape(en.machines[l], input,
                                       BitString::from_value(t, leak_rand_bits), budget,
                                       static_cast<std::size_t>(ell) + 1);
        leak_w[l].push_back(std::move(out.output));  // empty when truncated
      }
    }
  }

  const std::vector<std::int64_t>& attack_guesses(std::size_t a_id, const BitString& w) {
    const auto key = std::make_pair(a_id, w.to_string());
    auto it = attack_memo.find(key);
    if (it != attack_memo.end()) return it->second;
    const std::size_t tapes = std::size_t{1} << attack_rand_bits;
    std::vector<std::int64_t> guesses;
    guesses.reserve(tapes);
    const BitString input = concat(x, w);
    for (std::uint64_t t = 0; t < tapes; ++t)
      guesses.push_back(packed_guess(
          run_with_tape(en.machines[a_id], input,
                        BitString::from_value(t, attack_rand_bits), budget, n),
          n));
    return attack_memo.emplace(key, std::move(guesses)).first->second;
  }

  // Exact joint success count for one distinct pair against packed target r.
  std::uint64_t success_count(std::size_t a_id, std::size_t l_id, std::uint64_t r_packed,
                              std::uint64_t dist) {
    std::uint64_t count = 0;
    for (const BitString& w : leak_w[l_id]) {
      if (w.size() > ell) continue;
      for (std::int64_t g : attack_guesses(a_id, w)) {
        if (g < 0) continue;
        if (std::popcount(static_cast<std::uint64_t>(g) ^ r_packed) <
            static_cast<int>(dist))
          ++count;
      }
    }
    return count;
  }
};

void check_oracle_guards(const HardnessProblemParams& params) {
  if (params.max_desc_bits > 6)
    throw GuardRefusal("hardness oracle: max_desc_bits <= 6 required for exact mode");
  if (params.leak_rand_bits + params.attack_rand_bits > 12)
    throw GuardRefusal("hardness oracle: more than 2^12 joint random paths");
}

RunCaches make_caches(const PairEnumeration& en, const BitString& x,
                      const HardnessProblemParams& params) {
  return RunCaches{en,
                   x,
                   budget_for(params),
                   params.n,
                   params.ell,
                   params.leak_rand_bits,
                   params.attack_rand_bits,
                   {},
                   {}};
}

}  // namespace

OracleVerdict hardness_yes_oracle(const BitString& x, const BitString& r,
                                  const HardnessProblemParams& params) {
  check_oracle_guards(params);
  if (x.size() != params.n)
    throw std::invalid_argument("hardness_yes_oracle: |x| must equal params.n");
  if (x.size() != r.size()) return OracleVerdict::no;
  if (params.n > 32) throw GuardRefusal("hardness_yes_oracle: n <= 32 required");

  PairEnumeration en = build_enumeration(params.max_desc_bits);
  RunCaches caches = make_caches(en, x, params);
  caches.fill_leaks(r);
  const std::uint64_t r_packed = r.to_value();
  const std::uint64_t total = 1ULL << (params.leak_rand_bits + params.attack_rand_bits);

  bool all_below_half = true;
  bool any_reach_full = false;
  for (std::size_t a = 0; a < en.machines.size(); ++a) {
    for (std::size_t l = 0; l < en.machines.size(); ++l) {
      const std::uint64_t count = caches.success_count(a, l, r_packed, params.dist);
      if (count * 2 * params.n >= total) all_below_half = false;
      if (count * params.n >= total) any_reach_full = true;
    }
  }
  if (any_reach_full) return OracleVerdict::no;
  if (all_below_half) return OracleVerdict::yes;
  return OracleVerdict::neither;
}

int hardness_verifier(const BitString& x, const BitString& r,
                      const HardnessProblemParams& params, RandomStream& rng) {
  if (x.size() != r.size()) return 0;
  if (x.size() != params.n)
    throw std::invalid_argument("hardness_verifier: |x| must equal params.n");

  PairEnumeration en = build_enumeration(params.max_desc_bits);
  RunCaches caches = make_caches(en, x, params);
  caches.fill_leaks(r);
  const std::uint64_t r_packed = r.to_value();

  const std::size_t desc_pairs = en.descs.size() * en.descs.size();
  const std::size_t samples =
      params.sample_count != 0
          ? params.sample_count
          : chernoff_samples(1.0 / (4.0 * static_cast<double>(params.n)),
                             1.0 / (20.0 * static_cast<double>(desc_pairs)));

  // Estimates are reused across description pairs decoding to the same
  // machines; the union bound only gets slacker.
  std::map<std::pair<std::size_t, std::size_t>, bool> verdict_memo;

  const std::size_t leak_tapes = std::size_t{1} << params.leak_rand_bits;
  const std::size_t attack_tapes = std::size_t{1} << params.attack_rand_bits;

  auto draw = [&rng](std::size_t bits) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits; ++i)
      v = (v << 1) | static_cast<std::uint64_t>(rng.next_bit());
    return v;
  };

  for (std::size_t ad = 0; ad < en.descs.size(); ++ad) {
    for (std::size_t ld = 0; ld < en.descs.size(); ++ld) {
      const auto ids = std::make_pair(en.machine_of_desc[ad], en.machine_of_desc[ld]);
      auto memo = verdict_memo.find(ids);
      if (memo != verdict_memo.end()) {
        if (memo->second) return 0;
        continue;
      }

      // Simulation results are a deterministic function of the tape pair;
      // tabulating them once per distinct machine pair leaves the sampling
      // distribution untouched.
      std::vector<std::vector<char>> success(leak_tapes,
                                             std::vector<char>(attack_tapes, 0));
      bool any_success = false;
      for (std::size_t tl = 0; tl < leak_tapes; ++tl) {
        const BitString& w = caches.leak_w[ids.second][tl];
        if (w.size() > params.ell) continue;
        const auto& guesses = caches.attack_guesses(ids.first, w);
        for (std::size_t ta = 0; ta < attack_tapes; ++ta) {
          const std::int64_t g = guesses[ta];
          if (g >= 0 && std::popcount(static_cast<std::uint64_t>(g) ^ r_packed) <
                            static_cast<int>(params.dist)) {
            success[tl][ta] = 1;
            any_success = true;
          }
        }
      }
      if (!any_success) {
        // Every sample of this pair fails, so its estimate is identically 0
        // and can never exceed the threshold; skipping the draws leaves the
        // verifier's output distribution unchanged.
        verdict_memo.emplace(ids, false);
        continue;
      }

      std::uint64_t successes = 0;
      bool exceeded = false;
      for (std::size_t sm = 0; sm < samples; ++sm) {
        const std::uint64_t t_l = draw(params.leak_rand_bits);
        const std::uint64_t t_a = draw(params.attack_rand_bits);
        successes += success[t_l][t_a];
        // The estimate can only keep exceeding 3/(4n) once this holds.
        if (successes * 4 * params.n > 3 * samples) {
          exceeded = true;
          break;
        }
      }
      verdict_memo.emplace(ids, exceeded);
      if (exceeded) return 0;
    }
  }
  return 1;
}

BitString hardness_finder(const BitString& x, RandomStream& rng) {
  return rng.next_bits(x.size());
}

CensusPair census_pair_from_machines(const Machine& attacker, const Machine& leak,
                                     const TruncationBudget& budget, std::uint64_t ell,
                                     std::size_t attack_rand_bits, BitString leak_tape) {
  CensusPair pair;
  pair.label = "machines";
  pair.attack_rand_bits = attack_rand_bits;
  pair.leak = [leak, budget, ell, tape = std::move(leak_tape)](const BitString& x,
                                                               const BitString& r) {
    return run_with_tape(leak, concat(x, r), tape, budget,
                         static_cast<std::size_t>(ell) + 1)
        .output;
  };
  pair.attack = [attacker, budget](const BitString& x, const BitString& w,
                                   const BitString& tape) {
    return run_with_tape(attacker, concat(x, w), tape, budget, x.size()).output;
  };
  return pair;
}

BigInt random_is_hard_census(const CensusPair& pair, const BitString& x,
                             std::uint64_t ell, std::uint64_t dist, unsigned threads) {
  const std::size_t n = x.size();
  if (n > 14) throw GuardRefusal("random_is_hard_census: n <= 14 required");
  if (pair.attack_rand_bits > 12)
    throw GuardRefusal("random_is_hard_census: more than 2^12 attack paths");

  const std::uint64_t tapes = 1ULL << pair.attack_rand_bits;
  const std::uint64_t r_count = 1ULL << n;

  auto count_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    // guesses per leaked string, local to the worker
    std::unordered_map<std::string, std::vector<std::int64_t>> memo;
    std::uint64_t bad = 0;
    for (std::uint64_t rv = lo; rv < hi; ++rv) {
      const BitString r = BitString::from_value(rv, n);
      const BitString w = pair.leak(x, r);
      if (w.size() > ell) continue;
      auto it = memo.find(w.to_string());
      if (it == memo.end()) {
        std::vector<std::int64_t> guesses;
        guesses.reserve(tapes);
        for (std::uint64_t t = 0; t < tapes; ++t) {
          const BitString guess =
              pair.attack(x, w, BitString::from_value(t, pair.attack_rand_bits));
          guesses.push_back(guess.size() == n
                                ? static_cast<std::int64_t>(guess.to_value())
                                : -1);
        }
        it = memo.emplace(w.to_string(), std::move(guesses)).first;
      }
      std::uint64_t hits = 0;
      for (std::int64_t g : it->second)
        if (g >= 0 &&
            std::popcount(static_cast<std::uint64_t>(g) ^ rv) < static_cast<int>(dist))
          ++hits;
      if (hits * 2 * n >= tapes) ++bad;  // P >= 1/(2n)
    }
    return bad;
  };

  if (threads <= 1) return BigInt(count_range(0, r_count));

  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (r_count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(r_count, lo + chunk);
    pool.emplace_back([&partial, t, lo, hi, &count_range]() {
      partial[t] = lo < hi ? count_range(lo, hi) : 0;
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t bad = 0;
  for (auto p : partial) bad += p;
  return BigInt(bad);
}

HardnessCensus hardness_yes_census(const BitString& x, const HardnessProblemParams& params,
                                   unsigned threads) {
  check_oracle_guards(params);
  if (params.n > 14) throw GuardRefusal("hardness_yes_census: n <= 14 required");
  if (x.size() != params.n)
    throw std::invalid_argument("hardness_yes_census: |x| must equal params.n");

  const PairEnumeration en = build_enumeration(params.max_desc_bits);
  const std::uint64_t total_paths =
      1ULL << (params.leak_rand_bits + params.attack_rand_bits);
  const std::uint64_t r_count = 1ULL << params.n;

  // Only distinct machine pairs matter for the quantifiers.
  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& not_yes,
                        std::uint64_t& no) {
    RunCaches caches = make_caches(en, x, params);
    for (std::uint64_t rv = lo; rv < hi; ++rv) {
      const BitString r = BitString::from_value(rv, params.n);
      caches.fill_leaks(r);
      bool fail_yes = false, is_no = false;
      for (std::size_t a = 0; a < en.machines.size() && !(fail_yes && is_no); ++a) {
        for (std::size_t l = 0; l < en.machines.size(); ++l) {
          const std::uint64_t count = caches.success_count(a, l, rv, params.dist);
          if (count * 2 * params.n >= total_paths) fail_yes = true;
          if (count * params.n >= total_paths) {
            is_no = true;
            break;
          }
        }
      }
      if (fail_yes) ++not_yes;
      if (is_no) ++no;
    }
  };

  HardnessCensus census;
  census.total = r_count;
  if (threads <= 1) {
    scan_range(0, r_count, census.not_yes, census.no);
    return census;
  }
  std::vector<std::uint64_t> not_yes(threads, 0), no(threads, 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (r_count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(r_count, lo + chunk);
    pool.emplace_back([&, t, lo, hi]() {
      if (lo < hi) scan_range(lo, hi, not_yes[t], no[t]);
    });
  }
  for (auto& th : pool) th.join();
  for (unsigned t = 0; t < threads; ++t) {
    census.not_yes += not_yes[t];
    census.no += no[t];
  }
  return census;
}

SearchProblem identity_problem() {
  SearchProblem p;
  p.label = "identity";
  p.verifier_rand_len = [](std::size_t) { return std::size_t{0}; };
  p.finder_rand_len = [](std::size_t) { return std::size_t{0}; };
  p.verify = [](const BitString& x, const BitString& y, const BitString&) {
    return x == y ? 1 : 0;
  };
  p.find = [](const BitString& x, const BitString&) { return x; };
  p.yes = [](const BitString& x, const BitString& y) { return x == y; };
  p.no = [](const BitString& x, const BitString& y) { return !(x == y); };
  return p;
}

SearchProblem agreement_problem(std::size_t flip_bits) {
  SearchProblem p;
  p.label = "agreement-flip" + std::to_string(flip_bits);
  p.verifier_rand_len = [](std::size_t n) { return static_cast<std::size_t>(ceil_log2(BigInt(n))); };
  p.finder_rand_len = [flip_bits](std::size_t n) { return std::min(flip_bits, n); };
  auto agreement = [](const BitString& x, const BitString& y) {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < x.size(); ++i) agree += (x.bit(i) == y.bit(i));
    return agree;
  };
  p.verify = [](const BitString& x, const BitString& y, const BitString& omega) {
    if (y.size() != x.size()) return 0;
    const std::size_t pos = static_cast<std::size_t>(omega.to_value()) % x.size();
    return x.bit(pos) == y.bit(pos) ? 1 : 0;
  };
  p.find = [flip_bits](const BitString& x, const BitString& gamma) {
    BitString y = x;
    const std::size_t k = std::min(flip_bits, x.size());
    for (std::size_t i = 0; i < k; ++i) y.set_bit(i, y.bit(i) ^ gamma.bit(i));
    return y;
  };
  p.yes = [agreement](const BitString& x, const BitString& y) {
    return y.size() == x.size() && 3 * agreement(x, y) >= 2 * x.size();
  };
  p.no = [agreement](const BitString& x, const BitString& y) {
    return y.size() != x.size() || 3 * agreement(x, y) <= x.size();
  };
  return p;
}

SearchProblem needle_problem() {
  SearchProblem p;
  p.label = "needle";
  p.verifier_rand_len = [](std::size_t) { return std::size_t{0}; };
  p.finder_rand_len = [](std::size_t n) { return n; };
  auto agrees_somewhere = [](const BitString& x, const BitString& y) {
    if (y.size() != x.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.bit(i) == y.bit(i)) return true;
    return false;
  };
  p.verify = [agrees_somewhere](const BitString& x, const BitString& y, const BitString&) {
    return agrees_somewhere(x, y) ? 1 : 0;
  };
  p.find = [](const BitString&, const BitString& gamma) { return gamma; };
  p.yes = agrees_somewhere;
  p.no = [agrees_somewhere](const BitString& x, const BitString& y) {
    return !agrees_somewhere(x, y);
  };
  return p;
}

SearchProblem hardness_search_problem(const HardnessProblemParams& params) {
  SearchProblem p;
  p.label = "hardness-n" + std::to_string(params.n);
  p.verifier_rand_len = [](std::size_t) { return std::size_t{64}; };
  p.finder_rand_len = [](std::size_t n) { return n; };
  p.verify = [params](const BitString& x, const BitString& y, const BitString& omega) {
    RandomStream stream(omega.to_value());
    return hardness_verifier(x, y, params, stream);
  };
  p.find = [](const BitString& x, const BitString& gamma) {
    BitString y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y.set_bit(i, gamma.bit(i));
    return y;
  };
  p.yes = [params](const BitString& x, const BitString& y) {
    return hardness_yes_oracle(x, y, params) == OracleVerdict::yes;
  };
  p.no = [params](const BitString& x, const BitString& y) {
    return hardness_yes_oracle(x, y, params) == OracleVerdict::no;
  };
  return p;
}

}  // namespace nwlab
