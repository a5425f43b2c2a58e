// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "msgadv/fuzz.hpp"
#include "msgadv/generators.hpp"
#include "msgadv/harness.hpp"

namespace msgadv {

using nlohmann::json;

// Loaders throw ParseError naming the offending field.

// {"n": int, "prefix": [[[from, to], ...], ...], "cycle": [...]}; self-loops
// are left out on output and implied on input.
json lasso_to_json(const LassoSequence& l);
LassoSequence lasso_from_json(const json& j);
LassoSequence parse_lasso(std::string_view text);

json graph_edges_json(const CommGraph& g);  // without self-loops

json to_json_value(const AdversaryCertificate& c);
AdversaryCertificate certificate_from_json(const json& j);
json to_json_value(const AdversaryWitness& w);
json to_json_value(const CheckResult& r);
CheckResult check_result_from_json(const json& j);

json to_json_value(const NodeState& s);
NodeState node_state_from_json(const json& j);

json to_json_value(const CoreStepOutcome& o);
CoreStepOutcome outcome_from_json(const json& j);

json to_json_value(const AdversaryParams& p);

// Resolved configuration including the lasso and certificate.
json config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const json& j);

// One header record, one record per round, one summary record.
std::string trace_to_jsonl(const Trace& t);
Trace trace_from_jsonl(std::string_view text);

json to_json_value(const OracleReport& r);
json to_json_value(const TrialResult& r);
json to_json_value(const FuzzSummary& s);

}  // namespace msgadv
