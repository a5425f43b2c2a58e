// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "io.hpp"
#include "msgadv/causal.hpp"
#include "msgadv/scenarios.hpp"

namespace msgadv::cli {

namespace {

class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  void expect(const std::string& what, bool ok, json detail = nullptr) {
    json a = {{"name", what}, {"ok", ok}};
    if (!detail.is_null()) a["detail"] = std::move(detail);
    assertions_.push_back(std::move(a));
    all_ok_ = all_ok_ && ok;
    std::cerr << (ok ? "  ok    " : "  FAIL  ") << what << "\n";
  }

  json& details() { return details_; }
  bool ok() const { return all_ok_; }

  json finish(json params) const {
    return {{"scenario", name_},
            {"params", std::move(params)},
            {"ok", all_ok_},
            {"assertions", assertions_},
            {"details", details_}};
  }

 private:
  std::string name_;
  json assertions_ = json::array();
  json details_ = json::object();
  bool all_ok_ = true;
};

struct Outputs {
  std::string dir;

  void lasso(const std::string& name, const LassoSequence& l) const {
    if (!dir.empty()) write_text(dir + "/" + name + ".json", lasso_to_json(l).dump(2) + "\n");
  }
  void trace(const std::string& name, const Trace& t) const {
    if (!dir.empty()) write_text(dir + "/" + name + ".jsonl", trace_to_jsonl(t));
  }
};

std::optional<Round> decision_round(const Trace& t, ProcessId p) {
  for (const auto& d : t.decisions) {
    if (d.pid == p) return d.round;
  }
  return std::nullopt;
}

json opt(const std::optional<Round>& r) { return r ? json(*r) : json(nullptr); }

void eps_pair(const ScenarioOptions& o, Report& rep, const Outputs& out) {
  const int D = o.D > 0 ? o.D : 2;
  const EpsPair sc = scenario_eps_pair(o.n, D, o.prefix);
  out.lasso("eps", sc.eps.lasso);
  out.lasso("eps_prime", sc.eps_prime.lasso);

  const auto& ce = sc.eps.certificate;
  const auto& cp = sc.eps_prime.certificate;
  rep.expect("eps is EStable", ce && ce->kind == AdversaryKind::kEStable,
             ce ? to_json_value(*ce) : json(nullptr));
  rep.expect("eps' is EStable", cp && cp->kind == AdversaryKind::kEStable,
             cp ? to_json_value(*cp) : json(nullptr));
  if (!ce || !cp) return;

  const Trace te = run_execution(sc.eps);
  const Trace tp = run_execution(sc.eps_prime);
  out.trace("eps", te);
  out.trace("eps_prime", tp);

  const Round through = o.prefix + 2 * D;
  Round same_until = -1;
  const Round h = std::min<Round>(te.rounds.size(), tp.rounds.size());
  while (same_until < h && indistinguishable(te, tp, 2, same_until + 1)) ++same_until;
  rep.expect("p2 indistinguishable through round " + std::to_string(through),
             same_until >= through, {{"through", through}, {"identical_through", same_until}});

  const OracleReport re = oracle_check(te, ce->deadline());
  const OracleReport rp = oracle_check(tp, cp->deadline());
  rep.expect("eps solves consensus by its deadline", re.ok(), to_json_value(re));
  rep.expect("eps' solves consensus by its deadline", rp.ok(), to_json_value(rp));

  const Round bound = ce->rsr + 2 * D;
  rep.expect("latest decision in eps is round rSR+2D",
             re.latest_decision_round == bound,
             {{"rSR", ce->rsr}, {"expected", bound}, {"latest", opt(re.latest_decision_round)}});
  rep.expect("p2 decides in eps at round rSR+2D", decision_round(te, 2) == bound,
             {{"p2", opt(decision_round(te, 2))}});

  json rounds = json::object();
  for (ProcessId p = 1; p <= o.n; ++p) {
    rounds["p" + std::to_string(p)] = {{"eps", opt(decision_round(te, p))},
                                       {"eps_prime", opt(decision_round(tp, p))}};
  }
  rep.details()["decision_rounds"] = rounds;
  rep.details()["earliest_decision_eps"] = opt(te.earliest_decision_round());
}

void hop_fallacy(const ScenarioOptions& o, Report& rep, const Outputs& out) {
  const LassoSequence l = scenario_hop_fallacy(o.n);
  out.lasso("hop_fallacy", l);
  json dist = json::array();
  bool all_two = true;
  for (Round r = 1; r <= l.cycle_length(); ++r) {
    const int d = hop_distance(l.graph(r), 1, 2);
    dist.push_back(d);
    all_two = all_two && d == 2;
  }
  rep.expect("p1 reaches p2 in two hops in every graph", all_two, dist);

  const Round horizon = l.default_horizon();
  const RoundWindow w(l, 1, horizon);
  Round cd = 0;
  for (Round r = 1; r <= horizon && cd == 0; ++r) {
    if (influences(w, 1, 0, 2, r)) cd = r;
  }
  rep.expect("p1's initial state first reaches p2 in round n-1", cd == o.n - 1,
             {{"cd", cd}, {"expected", o.n - 1}});
  const auto wit = check_dynamic_diameter(l, 2);
  json wj = nullptr;
  if (wit) {
    wj = {{"root", wit->root.members()}, {"rounds", wit->rounds}, {"p", wit->p},
          {"missing", wit->missing.members()}};
  }
  rep.expect("dynamic diameter 2 does not hold", wit.has_value(), wj);
  rep.details()["cd"] = cd;
  rep.details()["per_round_distance"] = dist;
}

void stab_not_enough(const ScenarioOptions& o, Report& rep, const Outputs& out) {
  const int D = o.D > 0 ? o.D : 1;
  const StabPair sc = scenario_stab_not_enough(o.n, o.tau, D);
  out.lasso("eps1", sc.eps1.lasso);
  out.lasso("eps2", sc.eps2.lasso);

  const CheckResult l2 = check_liveness(sc.eps2.lasso);
  rep.expect("eps2 satisfies Liveness", l2.ok, to_json_value(l2));
  const CheckResult s2 = check_safety(sc.eps2.lasso, D);
  const bool predicted = !s2.ok && s2.witness && s2.witness->root == ProcessSet{1} &&
                         s2.witness->a == 1 && s2.witness->b == o.tau;
  rep.expect("eps2 violates Safety with root {1} on [1, tau]", predicted,
             to_json_value(s2));

  const Trace t1 = run_execution(sc.eps1);
  const Trace t2 = run_execution(sc.eps2);
  out.trace("eps1", t1);
  out.trace("eps2", t2);
  const OracleReport r1 = oracle_check(t1, sc.eps1.deadline().value_or(sc.eps1.horizon));
  const OracleReport r2 = oracle_check(t2, sc.eps2.resolved_horizon());
  rep.expect("eps1 solves consensus", r1.ok(), to_json_value(r1));
  rep.expect("eps2 breaks Agreement", !r2.agreement, to_json_value(r2));
}

void bounded_gap(const ScenarioOptions& o, Report& rep, const Outputs& out) {
  RunConfig full = scenario_bounded_gap(o.k);
  out.lasso("bounded_gap", full.lasso);
  rep.expect("lasso is AltEStable",
             full.certificate && full.certificate->kind == AdversaryKind::kAltEStable,
             full.certificate ? to_json_value(*full.certificate) : json(nullptr));
  if (!full.certificate) return;
  RunConfig bounded = full;
  bounded.mode = HistoryMode::bounded(o.k);
  const Trace tf = run_execution(full);
  const Trace tb = run_execution(bounded);
  out.trace("full", tf);
  out.trace("bounded", tb);
  const Round deadline = full.certificate->deadline();
  const OracleReport rf = oracle_check(tf, deadline);
  const OracleReport rb = oracle_check(tb, deadline);
  rep.expect("full history terminates by r_D", rf.ok(), to_json_value(rf));
  rep.expect("bounded(k) history misses r_D", !rb.termination, to_json_value(rb));
}

}  // namespace

int cmd_scenario(const ScenarioOptions& o) {
  Outputs out{o.out_dir};
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  Report rep(o.name);
  json params = {{"n", o.n}};
  std::cerr << "scenario " << o.name << "\n";
  if (o.name == "eps-pair") {
    params["D"] = o.D > 0 ? o.D : 2;
    params["prefix"] = o.prefix;
    eps_pair(o, rep, out);
  } else if (o.name == "hop-fallacy") {
    hop_fallacy(o, rep, out);
  } else if (o.name == "stab-not-enough") {
    params["D"] = o.D > 0 ? o.D : 1;
    params["tau"] = o.tau;
    stab_not_enough(o, rep, out);
  } else if (o.name == "bounded-gap") {
    params = {{"n", 4}, {"D", 2}, {"k", o.k}};
    bounded_gap(o, rep, out);
  } else {
    throw InvalidArgument("unknown scenario '" + o.name + "'");
  }
  print_json(rep.finish(params));
  return rep.ok() ? kPass : kNotSatisfied;
}

}  // namespace msgadv::cli
