// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <iostream>

#include "io.hpp"
#include "msgadv/dot.hpp"

namespace msgadv::cli {

namespace {

AdversaryKind kind_or_throw(const std::string& s) {
  auto k = parse_kind(s);
  if (!k) throw InvalidArgument("unknown adversary '" + s + "'");
  return *k;
}

int require_d(int D, const std::string& kind) {
  if (D == 0) throw InvalidArgument("--d is required for " + kind);
  return D;
}

}  // namespace

CoreStepOptions parse_mutation(const std::string& m) {
  CoreStepOptions opts;
  if (m.empty()) return opts;
  if (m == "skip-c3") {
    opts.skip_c3 = true;
    return opts;
  }
  throw InvalidArgument("unknown mutation '" + m + "'");
}

int cmd_generate(const GenerateOptions& o) {
  AdversaryParams p;
  p.n = o.n;
  p.D = o.D;
  p.x = o.x;
  p.y = o.y;
  p.seed = o.seed;
  p.rgst_target = o.rgst;
  p.rsr_target = o.rsr;
  p.spurious_root = o.spurious;
  p.consecutive_reappearances = o.consecutive;

  GeneratedLasso g;
  const AdversaryKind kind = kind_or_throw(o.adversary);
  switch (kind) {
    case AdversaryKind::kEStable:
      g = generate_estable(p);
      break;
    case AdversaryKind::kAltEStable:
      g = generate_alt_estable(p);
      break;
    case AdversaryKind::kMad:
      g = generate_mad(p);
      break;
    default:
      throw InvalidArgument("generate supports estable, altestable and mad");
  }

  json params = to_json_value(p);
  params["adversary"] = o.adversary;
  const json lasso = lasso_to_json(g.lasso);
  const json cert = to_json_value(g.certificate);
  if (!o.out.empty()) write_text(o.out, lasso.dump(2) + "\n");
  if (!o.cert_out.empty()) write_text(o.cert_out, cert.dump(2) + "\n");
  print_json({{"config", params},
              {"certificate", cert},
              {"planted", to_json_value(g.planted)},
              {"attempts", g.attempts},
              {"lasso", lasso}});
  std::cerr << "generated " << o.adversary << " lasso: n=" << p.n << " D=" << p.D
            << " prefix=" << g.lasso.prefix_length()
            << " cycle=" << g.lasso.cycle_length() << " rGST=" << g.certificate.rgst
            << " rSR=" << g.certificate.rsr << " deadline=" << g.certificate.deadline()
            << "\n";
  return kPass;
}

int cmd_check(const CheckOptions& o) {
  const LassoSequence l = load_lasso(o.lasso);
  const AdversaryKind kind = kind_or_throw(o.adversary);
  const int x = o.x > 0 ? o.x : o.D;
  const int y = o.y > 0 ? o.y : o.D;
  CheckResult r;
  switch (kind) {
    case AdversaryKind::kLiveness:
      r = check_liveness(l);
      break;
    case AdversaryKind::kSafety:
      if (x <= 0) throw InvalidArgument("--x (or --d) is required for safety");
      r = check_safety(l, x, o.horizon);
      break;
    case AdversaryKind::kEStable:
      r = check_estable(l, require_d(o.D, o.adversary));
      break;
    case AdversaryKind::kAltLiveness:
      r = check_alt_liveness(l, require_d(o.D, o.adversary), y, o.horizon);
      break;
    case AdversaryKind::kAltSafety:
      if (x <= 0) throw InvalidArgument("--x (or --d) is required for altsafety");
      r = check_alt_safety(l, x, o.horizon);
      break;
    case AdversaryKind::kAltEStable:
      r = check_alt_estable(l, require_d(o.D, o.adversary), o.horizon);
      break;
    case AdversaryKind::kMad:
      r = check_mad(l, x, y, require_d(o.D, o.adversary), o.horizon);
      break;
    case AdversaryKind::kVsrc: {
      const int D = require_d(o.D, o.adversary);
      r = check_vsrc(l, o.window > 0 ? o.window : 4 * D, D);
      break;
    }
  }
  json out = to_json_value(r);
  out["config"] = {{"adversary", o.adversary}, {"D", o.D}, {"x", x}, {"y", y},
                   {"window", o.window}, {"horizon", o.horizon}, {"n", l.n()}};
  print_json(out);
  if (r.ok) {
    std::cerr << o.adversary << ": satisfied, rGST=" << r.certificate->rgst
              << " rSR=" << r.certificate->rsr << " root=" << r.certificate->root.to_string()
              << "\n";
    return kPass;
  }
  std::cerr << o.adversary << ": not satisfied"
            << (r.witness ? ": " + r.witness->reason : std::string()) << "\n";
  return kNotSatisfied;
}

int cmd_run(const RunOptions& o) {
  RunConfig cfg;
  cfg.lasso = load_lasso(o.lasso);
  cfg.n = cfg.lasso.n();
  cfg.D = o.D;
  cfg.inputs = o.inputs.empty() ? std::vector<Value>(static_cast<std::size_t>(cfg.n), 0)
                                : o.inputs;
  cfg.mode = HistoryMode::parse(o.mode);
  cfg.seed = o.seed;
  cfg.core = parse_mutation(o.mutation);
  cfg.record_states = o.record_states;
  check_diameter_param(cfg.n, cfg.D);
  cfg.certificate = find_certificate(cfg.lasso, cfg.D);
  cfg.horizon = o.horizon;
  if (cfg.horizon == 0 && !cfg.certificate) {
    cfg.horizon = cfg.lasso.default_horizon() + 2 * cfg.D;
  }
  cfg.validate();

  const Trace t = run_execution(cfg);
  const Round deadline = cfg.deadline().value_or(cfg.resolved_horizon());
  const OracleReport rep = oracle_check(t, deadline);

  if (!o.trace_out.empty()) write_text(o.trace_out, trace_to_jsonl(t));
  if (!o.dot_out.empty()) {
    write_text(o.dot_out, lasso_to_dot(cfg.lasso, cfg.resolved_horizon()));
  }
  json out = {{"config", config_to_json(cfg)},
              {"report", to_json_value(rep)},
              {"decisions", json::array()},
              {"latest_decision_round", rep.latest_decision_round
                                            ? json(*rep.latest_decision_round)
                                            : json(nullptr)}};
  for (const auto& d : t.decisions) {
    out["decisions"].push_back({{"pid", d.pid}, {"round", d.round}, {"value", d.value}});
  }
  print_json(out);

  if (rep.failure) {
    std::cerr << "invariant violation at p" << rep.failure->pid << " round "
              << rep.failure->round << ": " << rep.failure->what << "\n";
    return kInvariantViolation;
  }
  std::cerr << "agreement=" << rep.agreement << " validity=" << rep.validity
            << " termination=" << rep.termination << " deadline=" << deadline
            << (cfg.certificate ? "" : " (no certificate; horizon used)") << "\n";
  return rep.ok() ? kPass : kNotSatisfied;
}

int cmd_fuzz(const FuzzOptions& o) {
  FuzzParams p;
  p.adversary = kind_or_throw(o.adversary);
  p.trials = o.trials;
  p.n_min = o.n_range.first;
  p.n_max = o.n_range.second;
  p.d_min = o.d_range.first;
  p.d_max = o.d_range.second;
  p.rsr_max = o.rsr_max;
  p.seed = o.seed;
  p.jobs = o.jobs;
  p.core = parse_mutation(o.mutation);
  p.extra_checks = !o.no_extra_checks;
  p.validate();

  if (o.replay_seed) {
    const TrialResult r = run_trial(p, *o.replay_seed);
    if (!o.trace_out.empty()) {
      write_text(o.trace_out, trace_to_jsonl(run_execution(trial_config(p, *o.replay_seed))));
    }
    print_json(to_json_value(r));
    std::cerr << "replay of seed " << *o.replay_seed << ": "
              << (r.passed() ? "pass" : "FAIL: " + r.failure) << "\n";
    if (r.report.failure) return kInvariantViolation;
    return r.passed() ? kPass : kNotSatisfied;
  }

  const FuzzSummary s = fuzz_campaign(p);
  json out = to_json_value(s);
  int at_last_reappearance = 0;
  for (const auto& r : s.results) {
    if (!r.certificate.reappearances.empty() &&
        r.deadline == r.certificate.reappearances.back()) {
      ++at_last_reappearance;
    }
  }
  out["deadline_is_last_reappearance"] = at_last_reappearance;
  print_json(out);
  if (!o.report_out.empty()) {
    json full = out;
    full["results"] = json::array();
    for (const auto& r : s.results) full["results"].push_back(to_json_value(r));
    write_text(o.report_out, full.dump(2) + "\n");
  }
  std::cerr << "fuzz " << o.adversary << ": " << s.passed << "/" << s.trials
            << " passed";
  if (s.first_failure) {
    std::cerr << "; first failing seed " << s.first_failure->trial_seed << " ("
              << s.first_failure->failure << ")";
  }
  std::cerr << "\n";
  if (s.bounded_mismatches > 0) {
    std::cerr << "note: bounded(2D+1) decisions differ from full history in "
              << s.bounded_mismatches << " trial(s); first seed "
              << *s.first_bounded_mismatch << "\n";
  }
  if (s.passed == s.trials) return kPass;
  return s.invariant_failures > 0 ? kInvariantViolation : kNotSatisfied;
}

}  // namespace msgadv::cli
