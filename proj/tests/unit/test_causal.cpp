// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "msgadv/causal.hpp"
#include "msgadv/scenarios.hpp"
#include "oracles.hpp"

using namespace msgadv;

namespace {

LassoSequence chain_forever(int n) {
  CommGraph g(n);
  for (ProcessId p = 1; p < n; ++p) g.add_edge(p, p + 1);
  return LassoSequence({}, {g});
}

}  // namespace

TEST(CausalPast, ImplementationsAgreeWithOracles) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const int n = rng.range(1, 6);
    const LassoSequence l = oracle::random_lasso(rng, n, 3, 3, rng.range(5, 40));
    const Round b = rng.range(1, 9);
    const Round a = rng.range(0, static_cast<int>(b));
    const ProcessId p = rng.range(1, n);
    const RoundWindow w(l, std::max<Round>(1, a), b);
    const ProcessSet back = causal_past(w, p, a, b);
    EXPECT_EQ(back, causal_past_forward(w, p, a, b));
    EXPECT_EQ(oracle::to_members(back), oracle::causal_past_recursive(l, p, a, b));
    const oracle::Flooding f(l, b);
    for (ProcessId q = 1; q <= n; ++q) {
      EXPECT_EQ(back.contains(q), f.reached(q, a, p, b));
    }
  }
}

TEST(CausalPast, ChainGrowsOneHopPerRound) {
  const LassoSequence l = chain_forever(4);
  const RoundWindow w(l, 1, 5);
  EXPECT_EQ(causal_past(w, 4, 3, 3), ProcessSet{4});
  EXPECT_EQ(causal_past(w, 4, 2, 3), (ProcessSet{3, 4}));
  EXPECT_EQ(causal_past(w, 4, 0, 3), (ProcessSet{1, 2, 3, 4}));
  EXPECT_TRUE(influences(w, 1, 0, 4, 3));
  EXPECT_FALSE(influences(w, 1, 1, 4, 3));
  EXPECT_THROW(causal_past(w, 4, 3, 6), InvalidArgument);
}

TEST(DynamicDiameter, ChainNeedsNMinusOne) {
  const LassoSequence l = chain_forever(4);
  EXPECT_FALSE(check_dynamic_diameter(l, 3).has_value());
  const auto wit = check_dynamic_diameter(l, 2);
  ASSERT_TRUE(wit.has_value());
  EXPECT_EQ(wit->root, ProcessSet{1});
  EXPECT_EQ(wit->p, 4);
  EXPECT_EQ(wit->missing, ProcessSet{1});
  EXPECT_THROW(check_dynamic_diameter(l, 4), InvalidArgument);
  EXPECT_THROW(check_dynamic_diameter(l, 0), InvalidArgument);
}

TEST(DynamicDiameter, HopCountIsNotCausalDistance) {
  for (int n = 4; n <= 7; ++n) {
    const LassoSequence l = scenario_hop_fallacy(n);
    for (Round r = 1; r <= l.cycle_length(); ++r) {
      EXPECT_EQ(hop_distance(l.graph(r), 1, 2), 2);
    }
    const oracle::Flooding f(l, n);
    EXPECT_FALSE(f.reached(1, 0, 2, n - 2));
    EXPECT_TRUE(f.reached(1, 0, 2, n - 1));
    EXPECT_TRUE(check_dynamic_diameter(l, 2).has_value());
  }
}
