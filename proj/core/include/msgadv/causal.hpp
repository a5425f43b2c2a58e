// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "msgadv/lasso.hpp"

namespace msgadv {

// CP_p(a, b): processes whose end-of-round-a state has affected p's
// end-of-round-b state. Uses graphs a+1..b, which must lie in the window
// (a may be w.a() - 1, in particular 0).
//
// The defining recursion is written with the edge pointing away from the
// set, but the intended meaning is "has affected p", so the set grows by
// in-neighbours: CP(l-1) = CP(l) | {q : (q -> q') in G^l, q' in CP(l)}.
ProcessSet causal_past(const RoundWindow& w, ProcessId p, Round a, Round b);

// Same set, computed by pushing each process's influence forward from
// round a. Independent of causal_past; used as a cross-check.
ProcessSet causal_past_forward(const RoundWindow& w, ProcessId p, Round a,
                               Round b);

// q's state at end of round r reached p by the end of round r2.
bool influences(const RoundWindow& w, ProcessId q, Round r, ProcessId p,
                Round r2);

struct DiameterWitness {
  ProcessSet root;
  std::vector<Round> rounds;  // r_1 .. r_D
  ProcessId p = 0;
  ProcessSet missing;  // root members not in CP_p(r_1 - 1, r_D)
};

// Checks every window of D (not necessarily consecutive) R-single rounds
// with r_D <= horizon. horizon <= 0 selects the default, which covers all
// windows of the infinite sequence.
std::optional<DiameterWitness> check_dynamic_diameter(const LassoSequence& l,
                                                      int D,
                                                      Round horizon = 0);

// Horizon large enough that every window of D R-single rounds starting in
// the prefix or the first cycle unrolling ends inside it.
Round diameter_horizon(const LassoSequence& l, int D);

}  // namespace msgadv
