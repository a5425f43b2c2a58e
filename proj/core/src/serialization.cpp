// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/serialization.hpp"

#include <sstream>

namespace msgadv {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key, "missing field");
  return *it;
}

template <typename T>
T as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(where, e.what());
  }
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  return as<T>(field(j, key, where), where + "." + key);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key,
                         const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return as<T>(*it, where + "." + key);
}

json set_json(ProcessSet s) { return s.members(); }

ProcessSet set_from(const json& j, const std::string& where) {
  ProcessSet s;
  for (ProcessId p : as<std::vector<ProcessId>>(j, where)) {
    if (p < 1 || p > kMaxProcesses) throw ParseError(where, "process id out of range");
    s.insert(p);
  }
  return s;
}

json edges_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back({e.from, e.to});
  return out;
}

std::vector<Edge> edges_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of edges");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const auto pair = as<std::vector<ProcessId>>(j[i], w);
    if (pair.size() != 2) throw ParseError(w, "edge must be [from, to]");
    es.push_back({pair[0], pair[1]});
  }
  return es;
}

CommGraph graph_from(int n, const json& j, const std::string& where) {
  const auto es = edges_from(j, where);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Edge& e = es[i];
    if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
      throw ParseError(where + "[" + std::to_string(i) + "]",
                       "endpoint out of range 1.." + std::to_string(n));
    }
  }
  return CommGraph(n, es);
}

std::vector<CommGraph> graphs_from(int n, const json& j,
                                   const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of graphs");
  std::vector<CommGraph> gs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    gs.push_back(graph_from(n, j[i], where + "[" + std::to_string(i) + "]"));
  }
  return gs;
}

json opt_json(const std::optional<Round>& r) {
  return r ? json(*r) : json(nullptr);
}

json decision_json(const DecisionEvent& d) {
  return {{"pid", d.pid}, {"round", d.round}, {"value", d.value}};
}

DecisionEvent decision_from(const json& j, const std::string& where) {
  return {get<ProcessId>(j, "pid", where), get<Round>(j, "round", where),
          get<Value>(j, "value", where)};
}

json decisions_json(const std::vector<DecisionEvent>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(decision_json(d));
  return out;
}

std::vector<DecisionEvent> decisions_from(const json& j,
                                          const std::string& where) {
  std::vector<DecisionEvent> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(decision_from(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

AdversaryKind kind_from(const json& j, const std::string& where) {
  const auto s = as<std::string>(j, where);
  auto k = parse_kind(s);
  if (!k) throw ParseError(where, "unknown adversary kind '" + s + "'");
  return *k;
}

}  // namespace

json graph_edges_json(const CommGraph& g) { return edges_json(g.edges(false)); }

json lasso_to_json(const LassoSequence& l) {
  json prefix = json::array();
  for (const auto& g : l.prefix()) prefix.push_back(graph_edges_json(g));
  json cycle = json::array();
  for (const auto& g : l.cycle()) cycle.push_back(graph_edges_json(g));
  return {{"n", l.n()}, {"prefix", prefix}, {"cycle", cycle}};
}

LassoSequence lasso_from_json(const json& j) {
  const int n = get<int>(j, "n", "lasso");
  if (n < 1 || n > kMaxProcesses) {
    throw ParseError("lasso.n", "must be in 1.." + std::to_string(kMaxProcesses));
  }
  auto prefix = j.contains("prefix")
                    ? graphs_from(n, j["prefix"], "lasso.prefix")
                    : std::vector<CommGraph>{};
  auto cycle = graphs_from(n, field(j, "cycle", "lasso"), "lasso.cycle");
  if (cycle.empty()) throw ParseError("lasso.cycle", "must be non-empty");
  return LassoSequence(std::move(prefix), std::move(cycle));
}

LassoSequence parse_lasso(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return lasso_from_json(j);
}

json to_json_value(const AdversaryCertificate& c) {
  return {{"kind", std::string(kind_name(c.kind))},
          {"rGST", c.rgst},
          {"rSR", c.rsr},
          {"root", set_json(c.root)},
          {"reappearances", c.reappearances},
          {"D", c.D},
          {"x", c.x},
          {"y", c.y},
          {"deadline", c.deadline()}};
}

AdversaryCertificate certificate_from_json(const json& j) {
  const std::string w = "certificate";
  AdversaryCertificate c;
  c.kind = kind_from(field(j, "kind", w), w + ".kind");
  c.rgst = get<Round>(j, "rGST", w);
  c.rsr = get<Round>(j, "rSR", w);
  c.root = set_from(field(j, "root", w), w + ".root");
  c.reappearances = get_opt<std::vector<Round>>(j, "reappearances", w).value_or(std::vector<Round>{});
  c.D = get_opt<int>(j, "D", w).value_or(0);
  c.x = get_opt<int>(j, "x", w).value_or(0);
  c.y = get_opt<int>(j, "y", w).value_or(0);
  return c;
}

json to_json_value(const AdversaryWitness& w) {
  json j = {{"reason", w.reason}, {"root", set_json(w.root)}};
  if (w.a != 0 || w.b != 0) j["interval"] = {w.a, w.b};
  if (!w.rounds.empty()) j["rounds"] = w.rounds;
  if (w.p != 0) j["pid"] = w.p;
  return j;
}

json to_json_value(const CheckResult& r) {
  return {{"kind", std::string(kind_name(r.kind))},
          {"ok", r.ok},
          {"certificate", r.certificate ? to_json_value(*r.certificate) : json(nullptr)},
          {"witness", r.witness ? to_json_value(*r.witness) : json(nullptr)}};
}

CheckResult check_result_from_json(const json& j) {
  const std::string w = "check";
  CheckResult r;
  r.kind = kind_from(field(j, "kind", w), w + ".kind");
  r.ok = get<bool>(j, "ok", w);
  if (j.contains("certificate") && !j["certificate"].is_null()) {
    r.certificate = certificate_from_json(j["certificate"]);
  }
  if (j.contains("witness") && !j["witness"].is_null()) {
    const json& wj = j["witness"];
    AdversaryWitness wit;
    wit.reason = get<std::string>(wj, "reason", w + ".witness");
    wit.root = set_from(field(wj, "root", w + ".witness"), w + ".witness.root");
    if (auto iv = get_opt<std::vector<Round>>(wj, "interval", w + ".witness")) {
      if (iv->size() != 2) throw ParseError(w + ".witness.interval", "expected [a, b]");
      wit.a = (*iv)[0];
      wit.b = (*iv)[1];
    }
    wit.rounds = get_opt<std::vector<Round>>(wj, "rounds", w + ".witness").value_or(std::vector<Round>{});
    wit.p = get_opt<ProcessId>(wj, "pid", w + ".witness").value_or(0);
    r.witness = wit;
  }
  return r;
}

json to_json_value(const NodeState& s) {
  json approx = json::object();
  json locks = json::object();
  for (Round r = s.first_round(); r <= s.m(); ++r) {
    const RoundView& v = s.view(r);
    approx[std::to_string(r)] = edges_json(v.approx.edges());
    for (std::size_t i = 0; i < v.locks.size(); ++i) {
      if (v.locks[i]) locks[std::to_string(i + 1)][std::to_string(r)] = *v.locks[i];
    }
  }
  return {{"pid", s.pid()},
          {"m", s.m()},
          {"x", s.x()},
          {"y", s.y() ? json(*s.y()) : json(nullptr)},
          {"mode", s.mode().to_string()},
          {"first_round", s.first_round()},
          {"approx", approx},
          {"locks", locks}};
}

NodeState node_state_from_json(const json& j) {
  const std::string w = "state";
  HistoryMode mode;
  if (auto ms = get_opt<std::string>(j, "mode", w)) {
    try {
      mode = HistoryMode::parse(*ms);
    } catch (const InvalidArgument& e) {
      throw ParseError(w + ".mode", e.what());
    }
  }
  const ProcessId pid = get<ProcessId>(j, "pid", w);
  if (pid < 1 || pid > kMaxProcesses) throw ParseError(w + ".pid", "out of range");
  const Round m = get<Round>(j, "m", w);
  const Round first = get_opt<Round>(j, "first_round", w).value_or(0);
  if (m < 0 || first < 0 || first > m) throw ParseError(w + ".m", "inconsistent rounds");
  std::vector<RoundView> views(static_cast<std::size_t>(m - first + 1));
  auto row = [&](const std::string& key, const std::string& where) -> RoundView& {
    Round r = 0;
    try {
      r = std::stoll(key);
    } catch (const std::exception&) {
      throw ParseError(where, "round key is not an integer");
    }
    if (r < first || r > m) throw ParseError(where, "round not held");
    return views[static_cast<std::size_t>(r - first)];
  };
  for (const auto& [key, edges] : field(j, "approx", w).items()) {
    const std::string where = w + ".approx." + key;
    RoundView& v = row(key, where);
    for (const Edge& e : edges_from(edges, where)) {
      try {
        v.approx.add_edge(e.from, e.to);
      } catch (const InvalidArgument& ex) {
        throw ParseError(where, ex.what());
      }
    }
  }
  for (const auto& [qkey, locks] : field(j, "locks", w).items()) {
    ProcessId q = 0;
    try {
      q = std::stoi(qkey);
    } catch (const std::exception&) {
      throw ParseError(w + ".locks." + qkey, "process key is not an integer");
    }
    if (q < 1 || q > kMaxProcesses) throw ParseError(w + ".locks." + qkey, "out of range");
    for (const auto& [rkey, v] : locks.items()) {
      if (v.is_null()) continue;
      const std::string where = w + ".locks." + qkey + "." + rkey;
      LockRow& lr = row(rkey, where).locks;
      if (lr.size() < static_cast<std::size_t>(q)) lr.resize(q);
      lr[q - 1] = as<Value>(v, where);
    }
  }
  return NodeState::restore(pid, get<Value>(j, "x", w), get_opt<Value>(j, "y", w),
                            mode, first, std::move(views));
}

json to_json_value(const CoreStepOutcome& o) {
  json locked = nullptr;
  if (o.locked) {
    locked = {{"root", set_json(o.locked->root)},
              {"a", o.locked->a},
              {"value", o.locked->value}};
  }
  json decided = nullptr;
  if (o.decided) {
    const auto& d = *o.decided;
    decided = {{"root", set_json(d.root)},
               {"single_run", {d.a1, d.b1}},
               {"common_span", {d.a2, d.b2}},
               {"value", d.value}};
  }
  return {{"round", o.round}, {"pid", o.pid}, {"locked", locked}, {"decided", decided}};
}

CoreStepOutcome outcome_from_json(const json& j) {
  const std::string w = "outcome";
  CoreStepOutcome o;
  o.round = get<Round>(j, "round", w);
  o.pid = get<ProcessId>(j, "pid", w);
  if (j.contains("locked") && !j["locked"].is_null()) {
    const json& l = j["locked"];
    o.locked = LockEvent{set_from(field(l, "root", w), w + ".locked.root"),
                         get<Round>(l, "a", w + ".locked"),
                         get<Value>(l, "value", w + ".locked")};
  }
  if (j.contains("decided") && !j["decided"].is_null()) {
    const json& d = j["decided"];
    const auto run = get<std::vector<Round>>(d, "single_run", w + ".decided");
    const auto span = get<std::vector<Round>>(d, "common_span", w + ".decided");
    if (run.size() != 2 || span.size() != 2) {
      throw ParseError(w + ".decided", "intervals must be [a, b]");
    }
    o.decided = DecideEvent{set_from(field(d, "root", w), w + ".decided.root"),
                            run[0], run[1], span[0], span[1],
                            get<Value>(d, "value", w + ".decided")};
  }
  return o;
}

json to_json_value(const AdversaryParams& p) {
  return {{"n", p.n},
          {"D", p.D},
          {"x", p.x},
          {"y", p.y},
          {"seed", p.seed},
          {"rgst", p.rgst_target},
          {"rsr", p.rsr_target},
          {"spurious_root", p.spurious_root},
          {"consecutive_reappearances", p.consecutive_reappearances}};
}

json config_to_json(const RunConfig& cfg) {
  return {{"n", cfg.n},
          {"D", cfg.D},
          {"inputs", cfg.inputs},
          {"horizon", cfg.resolved_horizon()},
          {"mode", cfg.mode.to_string()},
          {"seed", cfg.seed},
          {"skip_c3", cfg.core.skip_c3},
          {"record_states", cfg.record_states},
          {"check_invariants", cfg.check_invariants},
          {"deadline", opt_json(cfg.deadline())},
          {"certificate", cfg.certificate ? to_json_value(*cfg.certificate) : json(nullptr)},
          {"lasso", lasso_to_json(cfg.lasso)}};
}

RunConfig config_from_json(const json& j) {
  const std::string w = "config";
  RunConfig cfg;
  cfg.n = get<int>(j, "n", w);
  cfg.D = get<int>(j, "D", w);
  cfg.inputs = get<std::vector<Value>>(j, "inputs", w);
  cfg.horizon = get_opt<Round>(j, "horizon", w).value_or(0);
  if (auto ms = get_opt<std::string>(j, "mode", w)) {
    try {
      cfg.mode = HistoryMode::parse(*ms);
    } catch (const InvalidArgument& e) {
      throw ParseError(w + ".mode", e.what());
    }
  }
  cfg.seed = get_opt<std::uint64_t>(j, "seed", w).value_or(0);
  cfg.core.skip_c3 = get_opt<bool>(j, "skip_c3", w).value_or(false);
  cfg.record_states = get_opt<bool>(j, "record_states", w).value_or(false);
  cfg.check_invariants = get_opt<bool>(j, "check_invariants", w).value_or(true);
  if (j.contains("certificate") && !j["certificate"].is_null()) {
    cfg.certificate = certificate_from_json(j["certificate"]);
  }
  cfg.lasso = lasso_from_json(field(j, "lasso", w));
  return cfg;
}

std::string trace_to_jsonl(const Trace& t) {
  std::ostringstream os;
  json header = {{"type", "header"}, {"config", config_to_json(t.config)}};
  json init = json::array();
  for (const auto& s : t.initial_states) init.push_back(to_json_value(s));
  header["initial_states"] = init;
  os << header.dump() << '\n';
  for (const RoundRecord& rec : t.rounds) {
    json outcomes = json::array();
    for (const auto& o : rec.outcomes) {
      if (o.locked || o.decided) outcomes.push_back(to_json_value(o));
    }
    json line = {{"type", "round"},
                 {"round", rec.round},
                 {"graph", graph_edges_json(rec.graph)},
                 {"outcomes", outcomes},
                 {"decisions", decisions_json(rec.decisions)}};
    if (!rec.states.empty()) {
      json states = json::array();
      for (const auto& s : rec.states) states.push_back(to_json_value(s));
      line["states"] = states;
    }
    os << line.dump() << '\n';
  }
  json final_states = json::array();
  for (const auto& s : t.final_states) final_states.push_back(to_json_value(s));
  json failure = nullptr;
  if (t.failure) {
    failure = {{"pid", t.failure->pid}, {"round", t.failure->round}, {"what", t.failure->what}};
  }
  json summary = {{"type", "summary"},
                  {"decisions", decisions_json(t.decisions)},
                  {"latest_decision_round", opt_json(t.latest_decision_round())},
                  {"failure", failure},
                  {"final_states", final_states}};
  os << summary.dump() << '\n';
  return os.str();
}

Trace trace_from_jsonl(std::string_view text) {
  Trace t;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string w = "line " + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(w, e.what());
    }
    const auto type = get<std::string>(j, "type", w);
    if (type == "header") {
      t.config = config_from_json(field(j, "config", w));
      for (const auto& s : field(j, "initial_states", w)) {
        t.initial_states.push_back(node_state_from_json(s));
      }
      have_header = true;
    } else if (type == "round") {
      if (!have_header) throw ParseError(w, "round record before header");
      RoundRecord rec;
      rec.round = get<Round>(j, "round", w);
      rec.graph = graph_from(t.config.n, field(j, "graph", w), w + ".graph");
      for (const auto& o : field(j, "outcomes", w)) {
        rec.outcomes.push_back(outcome_from_json(o));
      }
      rec.decisions = decisions_from(field(j, "decisions", w), w + ".decisions");
      if (j.contains("states")) {
        for (const auto& s : j["states"]) rec.states.push_back(node_state_from_json(s));
      }
      t.rounds.push_back(std::move(rec));
    } else if (type == "summary") {
      t.decisions = decisions_from(field(j, "decisions", w), w + ".decisions");
      for (const auto& s : field(j, "final_states", w)) {
        t.final_states.push_back(node_state_from_json(s));
      }
      const json& f = field(j, "failure", w);
      if (!f.is_null()) {
        t.failure = RunFailure{get<ProcessId>(f, "pid", w), get<Round>(f, "round", w),
                               get<std::string>(f, "what", w)};
      }
    } else {
      throw ParseError(w + ".type", "unknown record type '" + type + "'");
    }
  }
  if (!have_header) throw ParseError("trace", "missing header record");
  return t;
}

json to_json_value(const OracleReport& r) {
  json undecided = r.undecided_by_deadline;
  json failure = nullptr;
  if (r.failure) {
    failure = {{"pid", r.failure->pid}, {"round", r.failure->round}, {"what", r.failure->what}};
  }
  return {{"ok", r.ok()},
          {"agreement", {{"ok", r.agreement},
                         {"witness", decisions_json(r.agreement_witness)},
                         {"double_decisions", decisions_json(r.double_decisions)}}},
          {"validity", {{"ok", r.validity}, {"witness", decisions_json(r.validity_witness)}}},
          {"termination", {{"ok", r.termination},
                           {"deadline", r.deadline},
                           {"undecided_by_deadline", undecided}}},
          {"latest_decision_round", opt_json(r.latest_decision_round)},
          {"invariant_violation", failure}};
}

json to_json_value(const TrialResult& r) {
  json j = {{"index", r.index},
            {"trial_seed", r.trial_seed},
            {"n", r.n},
            {"D", r.D},
            {"inputs", r.inputs},
            {"deadline", r.deadline},
            {"latest_decision_round", opt_json(r.latest_decision_round)},
            {"generator_attempts", r.generator_attempts},
            {"passed", r.passed()},
            {"failure", r.failure}};
  if (r.n > 0) {
    j["certificate"] = to_json_value(r.certificate);
    j["planted"] = to_json_value(r.planted);
    j["spurious_root"] = r.spurious_root;
  }
  if (r.bounded_matches) j["bounded_matches"] = *r.bounded_matches;
  if (r.containment_holds) j["containment_holds"] = *r.containment_holds;
  return j;
}

json to_json_value(const FuzzSummary& s) {
  const FuzzParams& p = s.params;
  json params = {{"adversary", std::string(kind_name(p.adversary))},
                 {"trials", p.trials},
                 {"n", {p.n_min, p.n_max}},
                 {"d", {p.d_min, p.d_max}},
                 {"rsr_max", p.rsr_max},
                 {"inputs", {p.input_min, p.input_max}},
                 {"seed", p.seed},
                 {"jobs", p.jobs},
                 {"skip_c3", p.core.skip_c3}};
  return {{"params", params},
          {"trials", s.trials},
          {"passed", s.passed},
          {"failed", s.trials - s.passed},
          {"bounded_mismatches", s.bounded_mismatches},
          {"first_bounded_mismatch_seed", s.first_bounded_mismatch
                                              ? json(*s.first_bounded_mismatch)
                                              : json(nullptr)},
          {"containment_failures", s.containment_failures},
          {"invariant_failures", s.invariant_failures},
          {"first_failure", s.first_failure ? to_json_value(*s.first_failure) : json(nullptr)}};
}

}  // namespace msgadv
