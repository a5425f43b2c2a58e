// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "msgadv/adversary.hpp"
#include "msgadv/scenarios.hpp"
#include "oracles.hpp"

using namespace msgadv;

namespace {

CommGraph star(int n, ProcessId c) {
  CommGraph g(n);
  for (ProcessId p = 1; p <= n; ++p) g.add_edge(c, p);
  return g;
}

}  // namespace

TEST(AdversaryKind, NamesRoundTrip) {
  for (auto k : {AdversaryKind::kLiveness, AdversaryKind::kSafety, AdversaryKind::kEStable,
                 AdversaryKind::kAltLiveness, AdversaryKind::kAltSafety,
                 AdversaryKind::kAltEStable, AdversaryKind::kMad, AdversaryKind::kVsrc}) {
    EXPECT_EQ(parse_kind(kind_name(k)), k);
  }
  EXPECT_FALSE(parse_kind("EStable").has_value());
}

TEST(DiameterParam, NamesConstraint) {
  try {
    check_diameter_param(5, 5);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("D must satisfy 1 <= D <= n-1"), std::string::npos);
  }
  EXPECT_NO_THROW(check_diameter_param(5, 4));
}

TEST(EStable, EpsIsCertifiedWithRsrOne) {
  const EpsPair sc = scenario_eps_pair(5, 2);
  const CheckResult r = check_estable(sc.eps.lasso, 2);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.certificate->rsr, 1);
  EXPECT_EQ(r.certificate->rgst, 1);
  EXPECT_EQ(r.certificate->root, ProcessSet{1});
  EXPECT_EQ(r.certificate->deadline(), 5);
  const CheckResult rp = check_estable(sc.eps_prime.lasso, 2);
  ASSERT_TRUE(rp.ok);
  EXPECT_EQ(rp.certificate->root, ProcessSet{4});
  EXPECT_EQ(rp.certificate->rgst, 3);
  EXPECT_EQ(rp.certificate->rsr, 5);
}

TEST(Liveness, AlternatingRootsFail) {
  const LassoSequence l({}, {star(3, 1), star(3, 2)});
  EXPECT_FALSE(check_liveness(l).ok);
  const LassoSequence ok({star(3, 2), CommGraph(3)}, {star(3, 1)});
  const CheckResult r = check_liveness(ok);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.certificate->rsr, 3);
}

TEST(Safety, StabilityIsNotEnoughWitness) {
  for (int n = 3; n <= 7; ++n) {
    for (Round tau = 2; tau <= 5; ++tau) {
      const StabPair sc = scenario_stab_not_enough(n, tau, 1);
      EXPECT_TRUE(check_liveness(sc.eps2.lasso).ok);
      const CheckResult s = check_safety(sc.eps2.lasso, 1);
      ASSERT_FALSE(s.ok);
      ASSERT_TRUE(s.witness.has_value());
      EXPECT_EQ(s.witness->root, ProcessSet{1});
      EXPECT_EQ(s.witness->a, 1);
      EXPECT_EQ(s.witness->b, tau);
      // The oracle sees {1} as a root on exactly [1, tau].
      const auto runs = oracle::root_runs(sc.eps2.lasso, 1, tau + 3);
      const auto it = std::find_if(runs.begin(), runs.end(), [](const oracle::Run& x) {
        return x.root == oracle::Members{1};
      });
      ASSERT_NE(it, runs.end());
      EXPECT_EQ(it->b, tau);
      EXPECT_FALSE(check_estable(sc.eps2.lasso, 1).ok);
      EXPECT_TRUE(check_safety(sc.eps2.lasso, static_cast<int>(tau)).ok);
    }
  }
}

TEST(EStable, DiameterFailureIsReported) {
  CommGraph g(4);
  for (ProcessId p = 1; p < 4; ++p) g.add_edge(p, p + 1);
  const LassoSequence l({}, {g});
  EXPECT_TRUE(check_estable(l, 3).ok);
  const CheckResult r = check_estable(l, 2);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->p, 4);
}

TEST(AltEStable, BoundedGapUsesReappearances) {
  for (int k = 1; k <= 5; ++k) {
    const RunConfig cfg = scenario_bounded_gap(k);
    const CheckResult r = check_alt_estable(cfg.lasso, 2);
    ASSERT_TRUE(r.ok) << k;
    ASSERT_EQ(r.certificate->reappearances.size(), 2u);
    EXPECT_EQ(r.certificate->reappearances[0], k + 3);
    EXPECT_EQ(r.certificate->deadline(), k + 5);
    EXPECT_GT(r.certificate->deadline(), r.certificate->rsr + 2 + k);
  }
}

TEST(Containment, EpsPassesWeakerPredicates) {
  const EpsPair sc = scenario_eps_pair(6, 2);
  EXPECT_TRUE(check_alt_estable(sc.eps.lasso, 2).ok);
  EXPECT_TRUE(check_vsrc(sc.eps.lasso, 8, 2).ok);
  EXPECT_TRUE(check_mad(sc.eps.lasso, 2, 2, 2).ok);
}

TEST(Vsrc, NeedsStableWindow) {
  const LassoSequence l({}, {star(3, 1), star(3, 2)});
  EXPECT_FALSE(check_vsrc(l, 2, 1).ok);
  const LassoSequence s({star(3, 2)}, {star(3, 1)});
  EXPECT_TRUE(check_vsrc(s, 4, 1).ok);
}
