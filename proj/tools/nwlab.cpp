// nwlab: experiment driver. Every subcommand reads a JSON config (and/or
// inline flags), runs one library operation, and writes a machine-readable
// report. Reports carry no timestamps and all randomness flows from the
// master seed, so identical configs produce byte-identical reports; run
// metadata goes to a ".meta.json" sidecar instead.
//
// Exit codes: 0 success, 1 validation error, 2 enumeration-guard refusal.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nwlab/adversary.hpp"
#include "nwlab/counting.hpp"
#include "nwlab/derand.hpp"
#include "nwlab/json_io.hpp"
#include "nwlab/machine.hpp"
#include "nwlab/searchprob.hpp"

using nlohmann::json;
using nlohmann::ordered_json;
using namespace nwlab;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;
};

void add_common(CLI::App* sub, CommonOpts& opts, bool with_seed = true) {
  sub->add_option("--config", opts.config_path, "JSON config file");
  sub->add_option("--out", opts.out_path, "report file (default: stdout)");
  if (with_seed) sub->add_option("--seed", opts.master_seed, "master seed");
  sub->add_option("--threads", opts.threads, "worker threads for census loops");
}

json load_config(const CommonOpts& opts) {
  if (opts.config_path.empty()) return json::object();
  std::ifstream in(opts.config_path);
  if (!in) throw std::invalid_argument("cannot open config file: " + opts.config_path);
  json j;
  in >> j;
  return j;
}

void write_report(const CommonOpts& opts, const ordered_json& report,
                  const std::string& subcommand) {
  const std::string text = report.dump(2) + "\n";
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + opts.out_path);
  out << text;

  ordered_json meta;
  meta["tool"] = "nwlab";
  meta["subcommand"] = subcommand;
  meta["config"] = opts.config_path;
  meta["seed"] = opts.master_seed;
  meta["threads"] = opts.threads;
  std::ofstream side(opts.out_path + ".meta.json", std::ios::binary);
  side << meta.dump(2) << "\n";
}

void write_text(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + opts.out_path);
  out << text;
}

ordered_json rat_json(const BigRat& q) {
  ordered_json j;
  j["exact"] = rat_to_string(q);
  j["approx"] = static_cast<double>(q);
  return j;
}

TargetedPRG prg_from_config(const json& cfg) { return prg_from_json(resolve_ref(cfg)); }

// Builds a generator from a design file + oracle spec, inferring the toy
// parameters from the design (m = all sets, n = 2^r).
TargetedPRG prg_from_design_file(const std::string& design_path, const std::string& oracle) {
  Design design = design_from_json(load_json_file(design_path));
  ToyParams params;
  params.m = design.sets.size();
  params.d = design.d;
  params.r = design.r;
  params.s_overlap = design.s;
  params.n = std::size_t{1} << design.r;
  return make_prg(std::move(design), parse_oracle(oracle), params);
}

ordered_json design_report(const Design& design) {
  ordered_json j = design_to_json(design);
  const auto check = verify_design(design);
  j["valid"] = check.valid;
  return j;
}

ordered_json advantage_json(const AdvantageReport& rep) {
  ordered_json j;
  j["beta"] = rat_json(rep.beta);
  j["beta_signed_b1"] = rat_json(rep.beta_signed_b1);
  j["beta_signed_b0"] = rat_json(rep.beta_signed_b0);
  j["b_star"] = rep.b_star;
  j["aux_enumerated"] = rep.aux_enumerated;
  return j;
}

int run_design(const CommonOpts& opts, const std::string& mode) {
  const json cfg = load_config(opts);
  ordered_json report;
  if (mode == "verify") {
    const Design design = design_from_json(resolve_ref(cfg.at("design")));
    const auto check = verify_design(design);
    report["valid"] = check.valid;
    static const char* kind[] = {"none", "params", "set", "overlap"};
    report["fail"] = kind[static_cast<int>(check.fail)];
    report["j"] = check.j;
    report["k"] = check.k;
    report["detail"] = check.detail;
  } else {
    const std::string method = cfg.at("method").get<std::string>();
    report["method"] = method;
    if (method == "greedy") {
      auto out = gen_design_greedy(cfg.at("d"), cfg.at("r"), cfg.at("s"),
                                   cfg.at("m_target"));
      report["requested"] = out.requested;
      report["complete"] = out.complete();
      report["design"] = design_report(out.design);
    } else if (method == "km") {
      auto out = gen_design_km(cfg.at("d"), rat_from_string(cfg.at("alpha")));
      report["size_floor"] = out.size_floor.str();
      report["rounded"] = out.rounded;
      report["meets_floor"] = out.meets_floor();
      report["design"] = design_report(out.design);
    } else if (method == "poly") {
      auto design = design_from_polynomials(cfg.at("p"), cfg.at("degree"),
                                            cfg.at("m_target"));
      report["design"] = design_report(design);
    } else {
      throw std::invalid_argument("design gen: method must be greedy, km or poly");
    }
  }
  write_report(opts, report, "design-" + mode);
  return 0;
}

int run_prg(const CommonOpts& opts, const std::string& mode, const std::string& design_path,
            const std::string& oracle, const std::string& target,
            const std::string& seed_bits) {
  const json cfg = load_config(opts);
  if (mode == "params") {
    auto p = derive_coupled_params(cfg.at("m").get<std::size_t>(),
                                 rat_from_string(cfg.at("alpha").get<std::string>()),
                                 cfg.value("C", 3));
    ordered_json report;
    report["m"] = p.m;
    report["alpha"] = rat_to_string(p.alpha);
    report["C"] = p.security_c;
    report["n_exponent"] = p.n_exponent;
    report["exponent_rounded"] = p.exponent_rounded;
    report["n"] = p.n.str();
    report["n_bits"] = bit_length(p.n);
    report["d"] = p.d;
    report["r"] = p.r;
    report["s_overlap"] = p.s_overlap;
    report["epsilon"] = rat_to_string(p.epsilon);
    report["ell"] = p.ell.str();
    report["dist_threshold"] = p.dist_threshold.str();
    report["c1"] = p.c1;
    report["c2"] = p.c2;
    report["design_size_floor"] = p.design_size_floor.str();
    report["design_floor_covers_m"] = p.design_floor_covers_m;
    report["beyond_toy_scale"] = p.beyond_toy_scale;
    write_report(opts, report, "prg-params");
    return 0;
  }

  TargetedPRG prg = !design_path.empty()
                        ? prg_from_design_file(design_path, oracle)
                        : prg_from_config(cfg.at("prg"));
  const BitString x = BitString::from_string(
      !target.empty() ? target : cfg.at("target").get<std::string>());

  if (mode == "expand") {
    const BitString seed = BitString::from_string(
        !seed_bits.empty() ? seed_bits : cfg.at("seed").get<std::string>());
    ordered_json report;
    report["output"] = expand(prg, x, seed).to_string();
    write_report(opts, report, "prg-expand");
    return 0;
  }

  // enumerate: CSV rows (seed, output)
  std::ostringstream csv;
  csv << "seed,output\n";
  enumerate_outputs(prg, x, [&csv](const BitString& seed, const BitString& out) {
    csv << seed.to_string() << ',' << out.to_string() << '\n';
  });
  write_text(opts, csv.str());
  return 0;
}

int run_attack(const CommonOpts& opts, const std::string& mode) {
  const json cfg = load_config(opts);
  TargetedPRG prg = prg_from_config(cfg.at("prg"));
  const BitString x = BitString::from_string(cfg.at("target").get<std::string>());

  if (mode == "advantage") {
    auto D = distinguisher_from_json(cfg.at("distinguisher"));
    write_report(opts, advantage_json(exact_advantage(D, prg, x)), "attack-advantage");
    return 0;
  }
  if (mode == "leak") {
    RandomStream rng(opts.master_seed);
    const BitString z = prg.oracle.evaluate(x);
    auto leak = run_leak(x, z, prg.params, prg.design, rng);
    ordered_json report;
    report["j"] = leak.j;
    report["y_off"] = leak.y_off.to_string();
    ordered_json tables = ordered_json::array();
    for (const auto& t : leak.tables) tables.push_back(t.to_string());
    report["tables"] = tables;
    report["b"] = leak.b;
    report["w_j"] = leak.w_j;
    report["w_tail"] = leak.w_tail.to_string();
    report["serialized"] = leak.serialized.to_string();
    write_report(opts, report, "attack-leak");
    return 0;
  }

  // census
  auto D = distinguisher_from_json(cfg.at("distinguisher"));
  auto rep = attack_success_census(D, prg, x, opts.threads);
  ordered_json report;
  report["beta"] = rat_json(rep.advantage.beta);
  report["b_star"] = rep.advantage.b_star;
  report["bound"] = rat_json(rep.bound);
  report["fraction"] = rat_json(rep.fraction);
  report["pass"] = rep.pass;
  write_report(opts, report, "attack-census");
  return 0;
}

int run_lemma(const CommonOpts& opts, const std::string& mode) {
  const json cfg = load_config(opts);
  ordered_json report;
  if (mode == "ball") {
    const std::uint64_t n = cfg.at("n"), radius = cfg.at("radius");
    report["n"] = n;
    report["radius"] = radius;
    report["volume"] = hamming_ball_volume(n, radius).str();
    write_report(opts, report, "lemma-ball");
    return 0;
  }
  if (mode == "badset") {
    const std::uint64_t n = cfg.at("n"), ell = cfg.at("ell"), dist = cfg.at("dist");
    report["n"] = n;
    report["ell"] = ell;
    report["dist"] = dist;
    report["bound"] = bad_set_bound(n, ell, dist).str();
    write_report(opts, report, "lemma-badset");
    return 0;
  }

  // census: bad-set count for one pair
  const BitString x = BitString::from_string(cfg.at("x").get<std::string>());
  const std::uint64_t ell = cfg.at("ell"), dist = cfg.at("dist");
  const json pair_cfg = cfg.at("pair");
  CensusPair pair;
  if (pair_cfg.at("kind") == "machines") {
    const Machine attacker = decode(BitString::from_string(pair_cfg.at("attacker").get<std::string>()));
    const Machine leak = decode(BitString::from_string(pair_cfg.at("leak").get<std::string>()));
    TruncationBudget budget{pair_cfg.at("max_steps").get<std::uint64_t>(),
                            pair_cfg.at("max_work_cells").get<std::size_t>()};
    BitString tape;
    if (pair_cfg.contains("leak_tape"))
      tape = BitString::from_string(pair_cfg.at("leak_tape").get<std::string>());
    pair = census_pair_from_machines(attacker, leak, budget, ell,
                                     pair_cfg.value("attack_rand_bits", 2), tape);
  } else if (pair_cfg.at("kind") == "const0") {
    pair.label = "const0";
    pair.attack_rand_bits = 0;
    pair.leak = [](const BitString&, const BitString&) { return BitString(); };
    pair.attack = [](const BitString& xx, const BitString&, const BitString&) {
      return BitString(xx.size());
    };
  } else {
    throw std::invalid_argument("lemma census: pair kind must be machines or const0");
  }
  const BigInt count = random_is_hard_census(pair, x, ell, dist, opts.threads);
  const BigInt bound = bad_set_bound(x.size(), ell, dist);
  report["count"] = count.str();
  report["bound"] = bound.str();
  report["pass"] = count <= bound;
  write_report(opts, report, "lemma-census");
  return 0;
}

int run_hardness(const CommonOpts& opts, const std::string& mode) {
  const json cfg = load_config(opts);
  ordered_json report;
  if (mode == "find") {
    RandomStream rng(opts.master_seed);
    const std::size_t len = cfg.contains("x")
                                ? BitString::from_string(cfg.at("x").get<std::string>()).size()
                                : cfg.at("len").get<std::size_t>();
    report["r"] = hardness_finder(BitString(len), rng).to_string();
    write_report(opts, report, "hardness-find");
    return 0;
  }
  const BitString x = BitString::from_string(cfg.at("x").get<std::string>());
  const BitString r = BitString::from_string(cfg.at("r").get<std::string>());
  auto params = hardness_params_from_json(cfg.at("params"));
  if (mode == "oracle") {
    const auto verdict = hardness_yes_oracle(x, r, params);
    report["verdict"] = verdict == OracleVerdict::yes
                            ? "yes"
                            : (verdict == OracleVerdict::no ? "no" : "neither");
  } else {
    RandomStream rng(opts.master_seed);
    report["accept"] = hardness_verifier(x, r, params, rng);
  }
  write_report(opts, report, "hardness-" + mode);
  return 0;
}

int run_derand(const CommonOpts& opts, const std::string& mode,
               const std::string& problem_path, const std::string& prg_path,
               const std::string& input) {
  const json cfg = load_config(opts);
  const json problem_cfg =
      !problem_path.empty() ? load_json_file(problem_path) : resolve_ref(cfg.at("problem"));
  const json prg_cfg =
      !prg_path.empty() ? load_json_file(prg_path) : resolve_ref(cfg.at("prg"));
  TargetedPRG prg = prg_from_json(prg_cfg);
  const BitString x = BitString::from_string(
      !input.empty() ? input : cfg.at("input").get<std::string>());
  const std::size_t pad_target = cfg.value("pad_target", prg.params.n);

  ordered_json report;
  if (mode == "decision") {
    auto M = decider_from_json(problem_cfg);
    report["answer"] = derandomize_decision(M, prg, x, pad_target);
    report["seeds_tried"] = std::size_t{1} << prg.params.d;
  } else {
    auto problem = problem_from_json(problem_cfg);
    auto outcome = derandomize_search(problem, prg, x, pad_target);
    report["found"] = outcome.found;
    report["witness"] = outcome.witness.to_string();
    report["seed_used"] = outcome.found ? outcome.seed_used.to_string() : "";
    report["seeds_tried"] = outcome.seeds_tried;
  }
  write_report(opts, report, "derand-" + mode);
  return 0;
}

int run_vm(const CommonOpts& opts, const std::string& mode, bool trace) {
  const json cfg = load_config(opts);
  if (mode == "enumerate") {
    auto machines = enumerate_machines(cfg.at("max_bits").get<std::size_t>());
    std::ostringstream csv;
    csv << "description,num_states\n";
    for (const auto& m : machines)
      csv << m.bits.to_string() << ',' << m.num_states << '\n';
    write_text(opts, csv.str());
    return 0;
  }

  const Machine machine = decode(BitString::from_string(cfg.at("bits").get<std::string>()));
  const BitString input = BitString::from_string(cfg.value("input", ""));
  TruncationBudget budget{cfg.value("max_steps", std::uint64_t{256}),
                          cfg.value("max_work_cells", std::size_t{8})};
  const std::size_t max_output = cfg.value("max_output", std::size_t{64});

  RunOutcome outcome;
  if (cfg.contains("tape")) {
    const BitString tape = BitString::from_string(cfg.at("tape").get<std::string>());
    outcome = trace ? run_with_tape_traced(machine, input, tape, budget, max_output,
                                           std::cerr)
                    : run_with_tape(machine, input, tape, budget, max_output);
  } else {
    RandomStream rng(opts.master_seed);
    outcome = run_truncated(machine, input, rng, budget, max_output);
  }

  ordered_json report;
  static const char* status[] = {"halted", "truncated_steps", "truncated_space"};
  report["status"] = status[static_cast<int>(outcome.status)];
  report["output"] = outcome.output.to_string();
  report["steps"] = outcome.steps;
  report["output_capped"] = outcome.output_capped;
  write_report(opts, report, "vm-run");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derandomization toolkit experiment driver"};
  app.require_subcommand(1);

  // design {gen, verify}
  auto* design = app.add_subcommand("design", "combinatorial designs");
  design->require_subcommand(1);
  CommonOpts design_gen_opts, design_verify_opts;
  auto* design_gen = design->add_subcommand("gen", "generate a design");
  add_common(design_gen, design_gen_opts, false);
  auto* design_verify = design->add_subcommand("verify", "verify a design");
  add_common(design_verify, design_verify_opts, false);

  // prg {params, expand, enumerate}
  auto* prg = app.add_subcommand("prg", "targeted generator");
  prg->require_subcommand(1);
  CommonOpts prg_params_opts, prg_expand_opts, prg_enum_opts;
  auto* prg_params = prg->add_subcommand("params", "derive coupled parameters");
  add_common(prg_params, prg_params_opts, false);
  auto* prg_expand = prg->add_subcommand("expand", "expand one seed");
  add_common(prg_expand, prg_expand_opts, false);
  std::string expand_design, expand_oracle, expand_target, expand_seed;
  prg_expand->add_option("--design", expand_design, "design JSON file");
  prg_expand->add_option("--oracle", expand_oracle,
                         "table:<bits> | seeded:<u64> | const0 | const1");
  prg_expand->add_option("--target", expand_target, "target bits");
  prg_expand->add_option("--seed-bits,--seed", expand_seed, "seed bits");
  auto* prg_enum = prg->add_subcommand("enumerate", "all seeds as CSV");
  add_common(prg_enum, prg_enum_opts, false);
  std::string enum_design, enum_oracle, enum_target;
  prg_enum->add_option("--design", enum_design, "design JSON file");
  prg_enum->add_option("--oracle", enum_oracle, "oracle spec");
  prg_enum->add_option("--target", enum_target, "target bits");

  // attack {advantage, leak, census}
  auto* attack = app.add_subcommand("attack", "distinguisher-to-predictor machinery");
  attack->require_subcommand(1);
  CommonOpts attack_adv_opts, attack_leak_opts, attack_census_opts;
  add_common(attack->add_subcommand("advantage", "exact advantage"), attack_adv_opts, false);
  add_common(attack->add_subcommand("leak", "one leak transcript"), attack_leak_opts);
  add_common(attack->add_subcommand("census", "exact predictor success census"),
             attack_census_opts, false);

  // lemma {ball, badset, census}
  auto* lemma = app.add_subcommand("lemma", "exact counting");
  lemma->require_subcommand(1);
  CommonOpts lemma_ball_opts, lemma_badset_opts, lemma_census_opts;
  add_common(lemma->add_subcommand("ball", "Hamming ball volume"), lemma_ball_opts, false);
  add_common(lemma->add_subcommand("badset", "bad-set size bound"), lemma_badset_opts,
             false);
  add_common(lemma->add_subcommand("census", "exact bad-set count for one pair"),
             lemma_census_opts, false);

  // hardness {oracle, verify, find}
  auto* hardness = app.add_subcommand("hardness", "the hardness search problem");
  hardness->require_subcommand(1);
  CommonOpts hardness_oracle_opts, hardness_verify_opts, hardness_find_opts;
  add_common(hardness->add_subcommand("oracle", "exact yes/no/neither"),
             hardness_oracle_opts, false);
  add_common(hardness->add_subcommand("verify", "sampling verifier"), hardness_verify_opts);
  add_common(hardness->add_subcommand("find", "random-string finder"), hardness_find_opts);

  // derand {decision, search}
  auto* derand = app.add_subcommand("derand", "seed-enumeration derandomizers");
  derand->require_subcommand(1);
  CommonOpts derand_dec_opts, derand_search_opts;
  auto* derand_dec = derand->add_subcommand("decision", "majority vote");
  add_common(derand_dec, derand_dec_opts, false);
  auto* derand_search = derand->add_subcommand("search", "first accepted candidate");
  add_common(derand_search, derand_search_opts, false);
  std::string derand_problem, derand_prg, derand_input;
  for (auto* sub : {derand_dec, derand_search}) {
    sub->add_option("--problem", derand_problem, "problem fixture JSON");
    sub->add_option("--prg", derand_prg, "generator config JSON");
    sub->add_option("--input", derand_input, "input bits");
  }

  // vm {run, enumerate}
  auto* vm = app.add_subcommand("vm", "machine model");
  vm->require_subcommand(1);
  CommonOpts vm_run_opts, vm_enum_opts;
  auto* vm_run = vm->add_subcommand("run", "run one machine");
  add_common(vm_run, vm_run_opts);
  bool vm_trace = false;
  vm_run->add_flag("--trace", vm_trace, "dump per-step trace to stderr");
  add_common(vm->add_subcommand("enumerate", "all descriptions as CSV"), vm_enum_opts,
             false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (design_gen->parsed()) return run_design(design_gen_opts, "gen");
    if (design_verify->parsed()) return run_design(design_verify_opts, "verify");
    if (prg_params->parsed()) return run_prg(prg_params_opts, "params", "", "", "", "");
    if (prg_expand->parsed())
      return run_prg(prg_expand_opts, "expand", expand_design, expand_oracle,
                     expand_target, expand_seed);
    if (prg_enum->parsed())
      return run_prg(prg_enum_opts, "enumerate", enum_design, enum_oracle, enum_target, "");
    if (attack->get_subcommand("advantage")->parsed())
      return run_attack(attack_adv_opts, "advantage");
    if (attack->get_subcommand("leak")->parsed()) return run_attack(attack_leak_opts, "leak");
    if (attack->get_subcommand("census")->parsed())
      return run_attack(attack_census_opts, "census");
    if (lemma->get_subcommand("ball")->parsed()) return run_lemma(lemma_ball_opts, "ball");
    if (lemma->get_subcommand("badset")->parsed())
      return run_lemma(lemma_badset_opts, "badset");
    if (lemma->get_subcommand("census")->parsed())
      return run_lemma(lemma_census_opts, "census");
    if (hardness->get_subcommand("oracle")->parsed())
      return run_hardness(hardness_oracle_opts, "oracle");
    if (hardness->get_subcommand("verify")->parsed())
      return run_hardness(hardness_verify_opts, "verify");
    if (hardness->get_subcommand("find")->parsed())
      return run_hardness(hardness_find_opts, "find");
    if (derand_dec->parsed())
      return run_derand(derand_dec_opts, "decision", derand_problem, derand_prg,
                        derand_input);
    if (derand_search->parsed())
      return run_derand(derand_search_opts, "search", derand_problem, derand_prg,
                        derand_input);
    if (vm_run->parsed()) return run_vm(vm_run_opts, "run", vm_trace);
    if (vm->get_subcommand("enumerate")->parsed()) return run_vm(vm_enum_opts, "enumerate", false);
  } catch (const GuardRefusal& guard) {
    std::cerr << "guard refusal: " << guard.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand\n";
  return 1;
}
