#include "nwlab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace nwlab {

using nlohmann::json;
using nlohmann::ordered_json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

json resolve_ref(const json& node) {
  if (node.is_object() && node.contains("file"))
    return load_json_file(node.at("file").get<std::string>());
  return node;
}

ordered_json design_to_json(const Design& design) {
  ordered_json j;
  j["d"] = design.d;
  j["r"] = design.r;
  j["s"] = design.s;
  j["sets"] = design.sets;
  return j;
}

Design design_from_json(const json& j) {
  Design design;
  design.d = j.at("d").get<std::size_t>();
  design.r = j.at("r").get<std::size_t>();
  design.s = j.at("s").get<std::size_t>();
  design.sets = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
  return design;
}

HardFunctionOracle parse_oracle(const std::string& spec) {
  if (spec == "const0") return constant_oracle(0);
  if (spec == "const1") return constant_oracle(1);
  if (spec.rfind("table:", 0) == 0)
    return table_oracle(BitString::from_string(spec.substr(6)));
  if (spec.rfind("seeded:", 0) == 0)
    return seeded_oracle(std::stoull(spec.substr(7)));
  if (spec.rfind("balanced:", 0) == 0)
    return balanced_oracle(std::stoull(spec.substr(9)));
  throw std::invalid_argument(
      "oracle spec must be table:<bits>, seeded:<u64>, balanced:<u64>, const0 or const1");
}

TargetedPRG prg_from_json(const json& j) {
  Design design = design_from_json(resolve_ref(j.at("design")));
  HardFunctionOracle oracle = parse_oracle(j.at("oracle").get<std::string>());
  const auto& pj = j.at("params");
  ToyParams params;
  params.m = pj.at("m").get<std::size_t>();
  params.n = pj.at("n").get<std::size_t>();
  params.d = pj.at("d").get<std::size_t>();
  params.r = pj.at("r").get<std::size_t>();
  params.s_overlap = pj.value("s_overlap", design.s);
  return make_prg(std::move(design), std::move(oracle), params);
}

Distinguisher distinguisher_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Distinguisher D;
  D.label = kind;
  if (kind == "first_bit" || kind == "bit") {
    const std::size_t index = j.value("index", 0);
    D.label = "bit" + std::to_string(index);
    D.decide = [index](std::size_t, const BitString&, const BitString& cand,
                       const BitString&) {
      return index < cand.size() ? cand.bit(index) : 0;
    };
    return D;
  }
  if (kind == "equals") {
    BitString target = BitString::from_string(j.at("value").get<std::string>());
    D.label = "equals:" + target.to_string();
    D.decide = [target](std::size_t, const BitString&, const BitString& cand,
                        const BitString&) { return cand == target ? 1 : 0; };
    return D;
  }
  if (kind == "constant") {
    const int value = j.at("value").get<int>() & 1;
    D.label = "const" + std::to_string(value);
    D.decide = [value](std::size_t, const BitString&, const BitString&, const BitString&) {
      return value;
    };
    return D;
  }
  if (kind == "table") {
    const std::size_t window = j.at("window").get<std::size_t>();
    BitString table = BitString::from_string(j.at("bits").get<std::string>());
    if (window > 16 || table.size() != (std::size_t{1} << window))
      throw std::invalid_argument("table distinguisher: bits must have length 2^window");
    D.label = "table:w" + std::to_string(window);
    D.decide = [window, table](std::size_t, const BitString&, const BitString& cand,
                               const BitString&) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < window; ++i)
        idx = (idx << 1) | static_cast<std::uint64_t>(i < cand.size() ? cand.bit(i) : 0);
      return table.bit(static_cast<std::size_t>(idx));
    };
    return D;
  }
  throw std::invalid_argument("unknown distinguisher kind: " + kind);
}

RandomizedDecider decider_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "coin_vote")
    throw std::invalid_argument("unknown decider kind: " + kind);
  const std::string pred = j.value("pred", "parity");
  const std::size_t arity = j.value("arity", 2);
  if (arity == 0 || arity > 8)
    throw std::invalid_argument("coin_vote decider: arity must lie in [1, 8]");

  RandomizedDecider M;
  M.label = "coin_vote:" + pred + ":" + std::to_string(arity);
  M.rand_bits = arity;
  auto which = [pred](const BitString& x) -> bool {
    if (pred == "always1") return true;
    if (pred == "always0") return false;
    if (pred == "parity") return x.popcount() % 2 == 1;
    if (pred == "first_bit") return x.size() > 0 && x.bit(0) == 1;
    throw std::invalid_argument("coin_vote decider: unknown pred");
  };
  M.decide = [which, arity](const BitString& x, const BitString& gamma) {
    bool any = false, all = true;
    for (std::size_t i = 0; i < arity; ++i) {
      const bool b = gamma.bit(i) == 1;
      any = any || b;
      all = all && b;
    }
    return which(x) ? (any ? 1 : 0) : (all ? 1 : 0);
  };
  return M;
}

SearchProblem problem_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity") return identity_problem();
  if (kind == "agreement") return agreement_problem(j.value("flip_bits", 2));
  if (kind == "needle") return needle_problem();
  if (kind == "hardness") return hardness_search_problem(hardness_params_from_json(j.at("params")));
  throw std::invalid_argument("unknown problem kind: " + kind);
}

HardnessProblemParams hardness_params_from_json(const json& j) {
  HardnessProblemParams p;
  p.n = j.at("n").get<std::size_t>();
  p.c1 = j.value("c1", 2);
  p.c2 = j.value("c2", 2);
  p.ell = j.at("ell").get<std::uint64_t>();
  p.dist = j.at("dist").get<std::uint64_t>();
  p.max_desc_bits = j.value("max_desc_bits", 4);
  p.leak_rand_bits = j.value("leak_rand_bits", 0);
  p.attack_rand_bits = j.value("attack_rand_bits", 4);
  p.sample_count = j.value("sample_count", 0);
  return p;
}

}  // namespace nwlab
