// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "msgadv/dot.hpp"

using namespace msgadv;

TEST(Dot, MarksRootMembers) {
  const CommGraph g(3, {{1, 2}, {2, 1}, {2, 3}});
  const std::string dot = to_dot(g, "G");
  EXPECT_EQ(dot,
            "digraph \"G\" {\n"
            "  p1 [shape=doublecircle];\n"
            "  p2 [shape=doublecircle];\n"
            "  p3 [shape=circle];\n"
            "  p1 -> p1;\n"
            "  p1 -> p2;\n"
            "  p2 -> p1;\n"
            "  p2 -> p2;\n"
            "  p2 -> p3;\n"
            "  p3 -> p3;\n"
            "}\n");
}

TEST(Dot, OneDigraphPerRound) {
  const LassoSequence l({CommGraph(2)}, {CommGraph(2, {{1, 2}})});
  const std::string dot = lasso_to_dot(l, 3);
  EXPECT_NE(dot.find("digraph \"G1\""), std::string::npos);
  EXPECT_NE(dot.find("digraph \"G3\""), std::string::npos);
  EXPECT_EQ(dot.find("digraph \"G4\""), std::string::npos);
}

TEST(Dot, ApproxIncludesOwner) {
  PartialGraph pg;
  pg.add_edge(1, 3);
  const std::string dot = approx_to_dot(pg, 2, "a");
  EXPECT_NE(dot.find("p2 [shape=doublecircle]"), std::string::npos);
  EXPECT_NE(dot.find("p3 [shape=circle]"), std::string::npos);
  EXPECT_NE(dot.find("p1 -> p3;"), std::string::npos);
}
