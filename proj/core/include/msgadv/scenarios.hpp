// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "msgadv/harness.hpp"

namespace msgadv {

// Two executions that p2 cannot tell apart for prefix_len + 2D rounds.
// eps: static graph with single root {p1}; a chain of D+1 processes from
// p1 to p2, every other process a direct out-neighbour of p1; inputs 0.
// eps': G' for D rounds (chain plus p3 -> p4), G'' for D rounds (chain
// plus p2 -> p1 and p4 -> p3), then G'' plus edges from p4 into the chain
// forever; p3 and p4 start with 1. Both may be preceded by prefix_len
// rounds alternating G' and G'' that end with G''.
// Requires n >= 4 and 1 <= D <= n-3.
struct EpsPair {
  RunConfig eps;
  RunConfig eps_prime;
};
EpsPair scenario_eps_pair(int n, int D, Round prefix_len = 0);

// eps1: chain p1 -> ... -> pn forever. eps2: p1 isolated while
// pn -> ... -> p2 for tau rounds, then pn -> ... -> p1 forever.
// Inputs: p1 = 0, everyone else 1.
struct StabPair {
  RunConfig eps1;
  RunConfig eps2;
};
StabPair scenario_stab_not_enough(int n, Round tau, int D = 1);

// Height-three trees rooted at p1 whose level-2 node changes every round,
// so p1 reaches p2 over two hops in each graph but first influences p2 in
// round n-1. Requires n >= 4.
LassoSequence scenario_hop_fallacy(int n);

// n=4, D=2, root {p1}: p1 broadcasts for D+1 rounds, disappears from
// everybody's view for k-1 rounds, then broadcasts in two non-consecutive
// rounds r_1 < r_D with r_D > 1 + D + k, and forever after. AltEStable
// with deadline r_D; bounded(k) history misses it.
RunConfig scenario_bounded_gap(int k);

}  // namespace msgadv
