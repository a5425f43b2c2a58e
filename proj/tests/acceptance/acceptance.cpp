// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
//
// One PASS/FAIL line per criterion; exit status 1 if any criterion fails.
// All tolerances are exact (zero) unless a line says otherwise.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "msgadv/causal.hpp"
#include "msgadv/fuzz.hpp"
#include "msgadv/scenarios.hpp"
#include "oracles.hpp"

using namespace msgadv;

namespace {

constexpr int kTrials = 500;
constexpr std::uint64_t kSeed = 1;
constexpr double kCampaignBudgetSeconds = 60.0;

int failures = 0;

void verdict(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void note(const std::string& s) { std::printf("  %s\n", s.c_str()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FuzzParams campaign(AdversaryKind kind) {
  FuzzParams p;
  p.adversary = kind;
  p.trials = kTrials;
  p.n_min = 2;
  p.n_max = 8;
  p.d_min = 1;
  p.d_max = 3;
  p.rsr_max = 12;
  p.seed = kSeed;
  // Criteria 4 and 8 are recomputed below rather than read back.
  p.extra_checks = false;
  return p;
}

struct Campaign {
  FuzzParams params;
  FuzzSummary summary;
  double seconds = 0;
};

Campaign run_campaign(AdversaryKind kind) {
  Campaign c{campaign(kind), {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  c.summary = fuzz_campaign(c.params);
  c.seconds = seconds_since(t0);
  return c;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void criterion1(const Campaign& c) {
  int ok = 0;
  int late = 0;
  for (const TrialResult& r : c.summary.results) {
    const bool in_time = !r.latest_decision_round ||
                         *r.latest_decision_round <= r.certificate.rsr + 2 * r.D;
    if (r.passed() && r.report.ok() && r.deadline == r.certificate.rsr + 2 * r.D &&
        in_time) {
      ++ok;
    }
    if (!in_time) ++late;
  }
  if (c.summary.first_failure) {
    note("first failure: seed " + std::to_string(c.summary.first_failure->trial_seed) +
         ": " + c.summary.first_failure->failure);
  }
  verdict(1, "estable-upper-bound",
          ok == kTrials && c.seconds < kCampaignBudgetSeconds,
          fmt("%d/%d trials satisfy agreement, validity, decided by rSR+2D "
              "(%d late); %.2fs (budget %.0fs)",
              ok, kTrials, late, c.seconds, kCampaignBudgetSeconds));
}

void criterion2(const Campaign& c) {
  int ok = 0;
  int spurious = 0;
  int rd_deadline = 0;
  for (const TrialResult& r : c.summary.results) {
    const auto& re = r.certificate.reappearances;
    const bool rd = static_cast<int>(re.size()) == r.D && r.deadline == re.back();
    if (rd) ++rd_deadline;
    if (r.spurious_root) ++spurious;
    if (r.passed() && r.report.ok() && rd) ++ok;
  }
  if (c.summary.first_failure) {
    note("first failure: seed " + std::to_string(c.summary.first_failure->trial_seed) +
         ": " + c.summary.first_failure->failure);
  }
  verdict(2, "altestable-upper-bound",
          ok == kTrials && spurious > 0 && c.seconds < kCampaignBudgetSeconds,
          fmt("%d/%d trials ok with deadline r_D (%d with deadline r_D, %d with "
              "spurious early root); %.2fs (budget %.0fs)",
              ok, kTrials, rd_deadline, spurious, c.seconds, kCampaignBudgetSeconds));
}

void criterion3() {
  int cases = 0;
  int ok = 0;
  std::map<Round, int> earliest_offsets;  // earliest decision - (rSR+2D)
  std::string first_bad;
  for (int n = 4; n <= 8; ++n) {
    for (int D = 1; D <= n - 3; ++D) {
      for (Round prefix = 0; prefix <= 3; ++prefix) {
        ++cases;
        const EpsPair sc = scenario_eps_pair(n, D, prefix);
        const CheckResult ce = check_estable(sc.eps.lasso, D);
        const CheckResult cp = check_estable(sc.eps_prime.lasso, D);
        const Trace te = run_execution(sc.eps);
        const Trace tp = run_execution(sc.eps_prime);
        const bool a = ce.ok && cp.ok;
        const bool b = indistinguishable(te, tp, 2, prefix + 2 * D);
        bool c = false;
        if (a) {
          const Round bound = ce.certificate->rsr + 2 * D;
          c = te.latest_decision_round() == bound &&
              oracle_check(te, bound).ok() && !te.failure;
          if (const auto e = te.earliest_decision_round()) ++earliest_offsets[*e - bound];
        }
        if (a && b && c) {
          ++ok;
        } else if (first_bad.empty()) {
          first_bad = fmt("n=%d D=%d prefix=%d: certified=%d indist=%d decided=%d", n, D,
                          prefix, a, b, c);
        }
      }
    }
  }
  std::string offs;
  for (const auto& [off, count] : earliest_offsets) {
    offs += fmt(" %+d:%d", off, count);
  }
  note("earliest decision relative to rSR+2D (offset:cases):" + offs);
  if (!first_bad.empty()) note("first failing case: " + first_bad);
  verdict(3, "eps-pair-tightness", ok == cases,
          fmt("%d/%d (n,D,prefix) cases: both EStable, p2 identical through "
              "prefix+2D, all decided exactly at rSR+2D",
              ok, cases));
}

void criterion4(const Campaign& c1) {
  int ok = 0;
  int alt = 0;
  int vsrc = 0;
  for (const TrialResult& r : c1.summary.results) {
    const RunConfig cfg = trial_config(c1.params, r.trial_seed);
    if (!check_estable(cfg.lasso, cfg.D).ok) continue;
    const bool a = check_alt_estable(cfg.lasso, cfg.D).ok;
    const bool v = check_vsrc(cfg.lasso, 4 * cfg.D, cfg.D).ok;
    alt += a;
    vsrc += v;
    ok += a && v;
  }
  verdict(4, "containment", ok == kTrials,
          fmt("%d/%d EStable lassos pass AltEStable(D) and VSRC(4D,D) "
              "(altestable %d, vsrc %d)",
              ok, kTrials, alt, vsrc));
}

void criterion5() {
  Rng rng(2024);
  long quads = 0;
  long mismatches = 0;
  int runs = 0;
  for (; runs < 200; ++runs) {
    const int n = rng.range(2, 6);
    const Round horizon = rng.range(4, 12);
    RunConfig cfg;
    cfg.n = n;
    cfg.D = 1;
    cfg.lasso = oracle::random_lasso(rng, n, 4, 4, rng.range(10, 40));
    cfg.inputs.assign(static_cast<std::size_t>(n), 0);
    cfg.horizon = horizon;
    cfg.record_states = true;
    const Trace t = run_execution(cfg);
    const oracle::Flooding fl(cfg.lasso, horizon);
    const RoundWindow w(cfg.lasso, 1, horizon);
    for (Round r2 = 1; r2 <= horizon; ++r2) {
      for (ProcessId p = 1; p <= n; ++p) {
        const NodeState& s = t.state(p, r2);
        for (Round r = 0; r < r2; ++r) {
          const auto cp = oracle::causal_past_recursive(cfg.lasso, p, r, r2);
          for (ProcessId q = 1; q <= n; ++q) {
            ++quads;
            const bool late = has_late_outgoing_edge(s, q, r);
            const bool flood = fl.reached(q, r, p, r2);
            const bool lib = influences(w, q, r, p, r2);
            const bool rec = cp.count(q) > 0;
            if (late != flood || lib != flood || rec != flood) ++mismatches;
          }
        }
      }
    }
  }
  verdict(5, "late-edge-equivalence", mismatches == 0,
          fmt("%ld quadruples over %d runs; %ld disagreements between late edge, "
              "library influence, flooding and recursive causal past",
              quads, runs, mismatches));
}

void criterion6(const Campaign& c1, const Campaign& c2) {
  int runs = 0;
  int checked = 0;
  int violations = 0;
  for (const Campaign* c : {&c1, &c2}) {
    for (const TrialResult& r : c->summary.results) {
      ++runs;
      checked += trial_config(c->params, r.trial_seed).check_invariants;
      if (r.report.failure) ++violations;
    }
  }
  violations = std::max(violations,
                        c1.summary.invariant_failures + c2.summary.invariant_failures);
  verdict(6, "lock-invariants", violations == 0 && checked == runs,
          fmt("%d violations in %d runs (%d with per-round invariant checks)",
              violations, runs, checked));
}

void criterion7() {
  int cases = 0;
  int ok = 0;
  std::string first_bad;
  for (int n = 3; n <= 8; ++n) {
    // p1 must stay cut off at least until it would decide in eps1.
    Round tau0 = 0;
    for (const DecisionEvent& d : run_execution(scenario_stab_not_enough(n, 1).eps1).decisions) {
      if (d.pid == 1) tau0 = d.round;
    }
    if (tau0 < 2) {
      ++cases;
      if (first_bad.empty()) first_bad = fmt("n=%d: p1 never decides in eps1", n);
      continue;
    }
    for (Round tau = tau0; tau <= tau0 + 3; ++tau) {
      ++cases;
      const StabPair sc = scenario_stab_not_enough(n, tau, 1);
      const CheckResult s = check_safety(sc.eps2.lasso, 1);
      const bool predicted = !s.ok && s.witness && s.witness->root == ProcessSet{1} &&
                             s.witness->a == 1 && s.witness->b == tau;
      bool oracle_agrees = false;
      for (const oracle::Run& r : oracle::root_runs(sc.eps2.lasso, 1, tau + n)) {
        if (r.root == oracle::Members{1} && r.a == 1 && r.b == tau) oracle_agrees = true;
      }
      const Trace t = run_execution(sc.eps2);
      const OracleReport rep = oracle_check(t, sc.eps2.resolved_horizon());
      const bool breaks = !rep.agreement && !t.failure;
      const bool liveness = check_liveness(sc.eps2.lasso).ok;
      if (predicted && oracle_agrees && breaks && liveness) {
        ++ok;
      } else if (first_bad.empty()) {
        first_bad = fmt("n=%d tau=%d: witness=%d oracle=%d disagreement=%d liveness=%d",
                        n, tau, predicted, oracle_agrees, breaks, liveness);
      }
    }
  }
  if (!first_bad.empty()) note("first failing case: " + first_bad);
  verdict(7, "safety-necessity", ok == cases,
          fmt("%d/%d (n, tau >= p1's eps1 decision round) cases: Safety(1) witness ({1},[1,tau]) confirmed by "
              "oracle, run violates Agreement",
              ok, cases));
}

void criterion8(const Campaign& c1) {
  int equal = 0;
  std::uint64_t first_seed = 0;
  for (const TrialResult& r : c1.summary.results) {
    RunConfig cfg = trial_config(c1.params, r.trial_seed);
    const Trace full = run_execution(cfg);
    cfg.mode = HistoryMode::bounded(2 * cfg.D + 1);
    const Trace bounded = run_execution(cfg);
    if (full.decisions == bounded.decisions && !bounded.failure) {
      ++equal;
    } else if (first_seed == 0) {
      first_seed = r.trial_seed;
    }
  }
  if (equal != kTrials) note("first mismatch: trial seed " + std::to_string(first_seed));
  int demos = 0;
  for (int k = 1; k <= 6; ++k) {
    RunConfig cfg = scenario_bounded_gap(k);
    const AdversaryCertificate& c = *cfg.certificate;
    const bool shape = c.kind == AdversaryKind::kAltEStable &&
                       c.deadline() > c.rsr + cfg.D + k &&
                       check_alt_estable(cfg.lasso, cfg.D).ok;
    const bool full_ok = oracle_check(run_execution(cfg), c.deadline()).ok();
    cfg.mode = HistoryMode::bounded(k);
    const bool bounded_misses = !oracle_check(run_execution(cfg), c.deadline()).termination;
    demos += shape && full_ok && bounded_misses;
  }
  verdict(8, "bounded-history", equal == kTrials && demos == 6,
          fmt("bounded(2D+1) decisions identical on %d/%d criterion-1 runs; "
              "bounded(k) gap demo fails as documented for %d/6 k",
              equal, kTrials, demos));
}

void criterion9() {
  int graphs = 0;
  int root_ok = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<Edge> pairs;
    for (ProcessId a = 1; a <= n; ++a) {
      for (ProcessId b = 1; b <= n; ++b) {
        if (a != b) pairs.push_back({a, b});
      }
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      CommGraph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1u) g.add_edge(pairs[i].from, pairs[i].to);
      }
      std::vector<oracle::Members> lib;
      for (ProcessSet s : root_components(g)) lib.push_back(oracle::to_members(s));
      ++graphs;
      root_ok += lib == oracle::roots_by_subsets(g);
    }
  }
  Rng rng(99);
  int windows = 0;
  int cp_ok = 0;
  for (; windows < 1000; ++windows) {
    const int n = rng.range(1, 8);
    const LassoSequence l = oracle::random_lasso(rng, n, 5, 4, rng.range(5, 40));
    const Round a = rng.range(0, 8);
    const Round b = a + rng.range(0, 8);
    const RoundWindow w(l, std::max<Round>(1, a), std::max<Round>(1, b));
    const ProcessId p = rng.range(1, n);
    cp_ok += causal_past(w, p, a, b) == causal_past_forward(w, p, a, b);
  }
  verdict(9, "oracle-cross-validation", root_ok == graphs && cp_ok == windows,
          fmt("roots match the subset predicate on %d/%d graphs (n<=4); "
              "causal past implementations agree on %d/%d windows",
              root_ok, graphs, cp_ok, windows));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const Campaign c1 = run_campaign(AdversaryKind::kEStable);
  const Campaign c2 = run_campaign(AdversaryKind::kAltEStable);
  criterion1(c1);
  criterion2(c2);
  criterion3();
  criterion4(c1);
  criterion5();
  criterion6(c1, c2);
  criterion7();
  criterion8(c1);
  criterion9();
  std::printf("%d/9 criteria passed in %.1fs\n", 9 - failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
