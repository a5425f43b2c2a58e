// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "msgadv/adversary.hpp"
#include "msgadv/generators.hpp"

using namespace msgadv;

TEST(GenerateEStable, HitsTargetsAndPassesChecker) {
  for (int n = 2; n <= 7; ++n) {
    for (int D = 1; D <= std::min(3, n - 1); ++D) {
      for (Round rsr : {1, 4, 9}) {
        AdversaryParams p;
        p.n = n;
        p.D = D;
        p.rsr_target = rsr;
        p.rgst_target = n == 2 ? std::max<Round>(1, rsr - D) : std::max<Round>(1, rsr - 3);
        p.seed = static_cast<std::uint64_t>(n * 100 + D * 10 + rsr);
        const GeneratedLasso g = generate_estable(p);
        const CheckResult r = check_estable(g.lasso, D);
        ASSERT_TRUE(r.ok);
        EXPECT_EQ(r.certificate->rsr, rsr);
        EXPECT_EQ(r.certificate->rgst, p.rgst_target);
        EXPECT_EQ(*r.certificate, g.certificate);
      }
    }
  }
}

TEST(GenerateEStable, Deterministic) {
  AdversaryParams p;
  p.n = 5;
  p.D = 2;
  p.rsr_target = 4;
  p.seed = 7;
  EXPECT_EQ(generate_estable(p).lasso, generate_estable(p).lasso);
  AdversaryParams q = p;
  q.seed = 8;
  EXPECT_FALSE(generate_estable(p).lasso == generate_estable(q).lasso);
}

TEST(GenerateEStable, RejectsInfeasible) {
  AdversaryParams p;
  p.n = 5;
  p.D = 5;
  EXPECT_THROW(generate_estable(p), InfeasibleParams);
  p.n = 2;
  p.D = 1;
  p.rgst_target = 1;
  p.rsr_target = 5;
  EXPECT_THROW(generate_estable(p), InfeasibleParams);
  p.rgst_target = 6;
  EXPECT_THROW(generate_estable(p), InfeasibleParams);
}

TEST(GenerateAltEStable, SpuriousAndConsecutiveVariants) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    AdversaryParams p;
    p.n = 3 + static_cast<int>(seed % 4);
    p.D = 1 + static_cast<int>(seed % 2);
    p.rsr_target = 1 + static_cast<Round>(seed % 6);
    p.seed = seed;
    p.spurious_root = seed % 2 == 0;
    p.consecutive_reappearances = seed % 3 == 0;
    const GeneratedLasso g = generate_alt_estable(p);
    const CheckResult r = check_alt_estable(g.lasso, p.D);
    ASSERT_TRUE(r.ok) << seed;
    EXPECT_EQ(r.certificate->reappearances.size(), static_cast<std::size_t>(p.D));
    EXPECT_LE(g.certificate.rgst, g.planted.rgst);
  }
}

TEST(GenerateMad, PassesChecker) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    AdversaryParams p;
    p.n = 5;
    p.D = 2;
    p.x = 1 + static_cast<int>(seed % 3);
    p.y = 1 + static_cast<int>(seed % 2);
    p.rsr_target = 3;
    p.seed = seed;
    const GeneratedLasso g = generate_mad(p);
    EXPECT_TRUE(check_mad(g.lasso, p.x, p.y, p.D).ok) << seed;
  }
}

TEST(PlantedGraph, HasExactlyThePlantedRoots) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::vector<ProcessSet> roots{{1, 3}, {4}};
    const CommGraph g = planted_graph(rng, 6, roots, 30);
    EXPECT_EQ(root_components(g), roots);
  }
}
