#pragma once

// JSON forms for the file-facing types: designs ({d, r, s, sets}) and the
// fixture kinds the CLI accepts (oracles, distinguishers, deciders, search
// problems, generator configs). Report construction lives in the CLI; this
// header is only the parsing/serialization boundary.

#include <json.hpp>

#include "nwlab/adversary.hpp"
#include "nwlab/design.hpp"
#include "nwlab/derand.hpp"
#include "nwlab/oracle.hpp"
#include "nwlab/prg.hpp"
#include "nwlab/searchprob.hpp"

namespace nwlab {

nlohmann::ordered_json design_to_json(const Design& design);
Design design_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

// Configs may reference other files: any object of the form {"file": path}
// is replaced by that file's contents (one level).
nlohmann::json resolve_ref(const nlohmann::json& node);

// "table:<bits>" | "seeded:<u64>" | "const0" | "const1"
HardFunctionOracle parse_oracle(const std::string& spec);

// {design: {...}, oracle: "...", params: {m, n, d, r}}
TargetedPRG prg_from_json(const nlohmann::json& j);

// {kind: first_bit|bit, index} | {kind: equals, value} | {kind: constant, value}
// | {kind: table, window, bits}   (table: decide by looking up the candidate's
//   first `window` bits in a 2^window-bit truth table)
Distinguisher distinguisher_from_json(const nlohmann::json& j);

// {kind: coin_vote, pred: parity|always1, arity}  -- OR of the first `arity`
// coins when pred(x) holds, AND of them otherwise.
RandomizedDecider decider_from_json(const nlohmann::json& j);

// {kind: identity|agreement|needle|hardness, ...}
SearchProblem problem_from_json(const nlohmann::json& j);

HardnessProblemParams hardness_params_from_json(const nlohmann::json& j);

}  // namespace nwlab
