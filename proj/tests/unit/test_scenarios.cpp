// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "msgadv/causal.hpp"
#include "msgadv/scenarios.hpp"

using namespace msgadv;

TEST(EpsPair, Shape) {
  const EpsPair sc = scenario_eps_pair(6, 2, 3);
  EXPECT_EQ(sc.eps.lasso.prefix().size(), 3u);
  EXPECT_EQ(sc.eps_prime.lasso.prefix().size(), 3u + 4u);
  EXPECT_EQ(sc.eps.inputs, (std::vector<Value>{0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(sc.eps_prime.inputs, (std::vector<Value>{0, 0, 1, 1, 0, 0}));
  EXPECT_THROW(scenario_eps_pair(3, 1), InvalidArgument);
  EXPECT_THROW(scenario_eps_pair(6, 4), InvalidArgument);
  EXPECT_THROW(scenario_eps_pair(6, 1, -1), InvalidArgument);
}

TEST(EpsPair, P2DecidesOnlyAtDeadline) {
  for (int D = 1; D <= 3; ++D) {
    const EpsPair sc = scenario_eps_pair(D + 4, D, 2);
    const Trace t = run_execution(sc.eps);
    const Round deadline = *sc.eps.deadline();
    for (const DecisionEvent& d : t.decisions) {
      if (d.pid == 2) EXPECT_EQ(d.round, deadline);
      EXPECT_LE(d.round, deadline);
    }
    const Trace tp = run_execution(sc.eps_prime);
    EXPECT_TRUE(oracle_check(tp, *sc.eps_prime.deadline()).ok());
  }
}

TEST(HopFallacy, TwoHopsPerGraphButSlowInfluence) {
  for (int n = 4; n <= 8; ++n) {
    const LassoSequence l = scenario_hop_fallacy(n);
    for (Round r = 1; r <= 2 * n; ++r) EXPECT_EQ(hop_distance(l.graph(r), 1, 2), 2);
    const RoundWindow w(l, 1, 2 * n);
    Round first = 0;
    for (Round b = 1; b <= 2 * n && first == 0; ++b) {
      if (causal_past(w, 2, 0, b).contains(1)) first = b;
    }
    EXPECT_EQ(first, n - 1);
  }
  EXPECT_THROW(scenario_hop_fallacy(3), InvalidArgument);
}

TEST(BoundedGap, FullMeetsDeadlineBoundedDoesNot) {
  for (int k = 1; k <= 4; ++k) {
    RunConfig cfg = scenario_bounded_gap(k);
    const Round deadline = *cfg.deadline();
    EXPECT_TRUE(oracle_check(run_execution(cfg), deadline).ok());
    cfg.mode = HistoryMode::bounded(k);
    EXPECT_FALSE(oracle_check(run_execution(cfg), deadline).termination) << k;
  }
  EXPECT_THROW(scenario_bounded_gap(0), InvalidArgument);
}

TEST(StabNotEnough, Eps1IsFine) {
  const StabPair sc = scenario_stab_not_enough(5, 3);
  const Trace t = run_execution(sc.eps1);
  EXPECT_TRUE(oracle_check(t, sc.eps1.resolved_horizon()).ok());
  EXPECT_THROW(scenario_stab_not_enough(5, 0), InvalidArgument);
}
