// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "msgadv/harness.hpp"
#include "msgadv/scenarios.hpp"
#include "oracles.hpp"

using namespace msgadv;

TEST(RunConfig, Validation) {
  RunConfig cfg = scenario_eps_pair(5, 2).eps;
  EXPECT_NO_THROW(cfg.validate());
  RunConfig bad = cfg;
  bad.inputs.pop_back();
  EXPECT_THROW(bad.validate(), InvalidArgument);
  EXPECT_THROW(run_execution(bad), InvalidArgument);
  bad = cfg;
  bad.n = 6;
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad = cfg;
  bad.certificate.reset();
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad.horizon = 9;
  EXPECT_NO_THROW(bad.validate());
  EXPECT_EQ(cfg.resolved_horizon(), 5 + 2 + 2);
}

TEST(FindCertificate, PrefersEStable) {
  const auto c = find_certificate(scenario_eps_pair(5, 2).eps.lasso, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, AdversaryKind::kEStable);
  const RunConfig gap = scenario_bounded_gap(2);
  const auto found = find_certificate(gap.lasso, 2);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->kind, AdversaryKind::kEStable);
  EXPECT_EQ(gap.certificate->kind, AdversaryKind::kAltEStable);
  EXPECT_LT(gap.certificate->deadline(), found->deadline());
}

TEST(RunExecution, EpsDecidesByDeadline) {
  for (int n = 4; n <= 7; ++n) {
    for (int D = 1; D <= n - 3; ++D) {
      const RunConfig cfg = scenario_eps_pair(n, D).eps;
      const Trace t = run_execution(cfg);
      ASSERT_FALSE(t.failure) << t.failure->what;
      const OracleReport rep = oracle_check(t, *cfg.deadline());
      EXPECT_TRUE(rep.ok());
      EXPECT_EQ(t.latest_decision_round(), 1 + 2 * D);
      for (const DecisionEvent& d : t.decisions) EXPECT_EQ(d.value, 0);
    }
  }
}

TEST(RunExecution, Deterministic) {
  const RunConfig cfg = scenario_eps_pair(6, 2, 3).eps_prime;
  const Trace a = run_execution(cfg);
  const Trace b = run_execution(cfg);
  EXPECT_EQ(a.decisions, b.decisions);
  EXPECT_EQ(a.final_states, b.final_states);
}

TEST(RunExecution, RecordedStatesMatchFinal) {
  RunConfig cfg = scenario_eps_pair(5, 2).eps;
  const Trace t = run_execution(cfg);
  ASSERT_EQ(static_cast<Round>(t.rounds.size()), cfg.resolved_horizon());
  for (ProcessId p = 1; p <= 5; ++p) {
    EXPECT_EQ(t.state(p, cfg.resolved_horizon()), t.final_states[p - 1]);
    EXPECT_EQ(t.state(p, 0), t.initial_states[p - 1]);
  }
  cfg.record_states = false;
  EXPECT_THROW(run_execution(cfg).state(1, 1), InvalidArgument);
}

TEST(OracleCheck, CatchesAgreementFailure) {
  const StabPair sc = scenario_stab_not_enough(5, 4);
  const Trace t = run_execution(sc.eps2);
  ASSERT_FALSE(t.failure);
  const OracleReport rep = oracle_check(t, sc.eps2.resolved_horizon());
  EXPECT_FALSE(rep.agreement);
  ASSERT_EQ(rep.agreement_witness.size(), 2u);
  EXPECT_NE(rep.agreement_witness[0].value, rep.agreement_witness[1].value);
  EXPECT_TRUE(rep.validity);
}

TEST(OracleCheck, TerminationAgainstDeadline) {
  const RunConfig cfg = scenario_eps_pair(5, 2).eps;
  const Trace t = run_execution(cfg);
  EXPECT_TRUE(oracle_check(t, 5).termination);
  const OracleReport early = oracle_check(t, 4);
  EXPECT_FALSE(early.termination);
  EXPECT_FALSE(early.undecided_by_deadline.empty());
}

TEST(Indistinguishable, EpsPairForP2) {
  const EpsPair sc = scenario_eps_pair(6, 2, 1);
  const Trace a = run_execution(sc.eps);
  const Trace b = run_execution(sc.eps_prime);
  EXPECT_TRUE(indistinguishable(a, b, 2, 1 + 4));
  EXPECT_FALSE(indistinguishable(a, b, 3, 1));
}

TEST(RunExecution, ValidityOnRandomEStable) {
  // Independent of generators: any lasso the checker certifies.
  Rng rng(77);
  int certified = 0;
  for (int i = 0; i < 300 && certified < 40; ++i) {
    const int n = rng.range(2, 5);
    const LassoSequence l = oracle::random_lasso(rng, n, 3, 2, 50);
    const int D = n - 1;
    const auto c = check_estable(l, D);
    if (!c.ok) continue;
    ++certified;
    RunConfig cfg;
    cfg.n = n;
    cfg.D = D;
    cfg.lasso = l;
    cfg.certificate = c.certificate;
    for (int p = 0; p < n; ++p) cfg.inputs.push_back(rng.range(0, 3));
    const Trace t = run_execution(cfg);
    const OracleReport rep = oracle_check(t, *cfg.deadline());
    EXPECT_TRUE(rep.ok()) << i;
    const std::set<Value> inputs(cfg.inputs.begin(), cfg.inputs.end());
    for (const DecisionEvent& d : t.decisions) EXPECT_TRUE(inputs.count(d.value));
  }
  EXPECT_GE(certified, 10);
}
