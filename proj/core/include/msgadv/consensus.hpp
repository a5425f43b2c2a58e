// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "msgadv/node_state.hpp"

namespace msgadv {

struct LockEvent {
  ProcessSet root;
  Round a = 0;
  Value value = 0;
  friend bool operator==(const LockEvent&, const LockEvent&) = default;
};

struct DecideEvent {
  ProcessSet root;
  Round a1 = 0;  // a'
  Round b1 = 0;  // b'
  Round a2 = 0;  // a''
  Round b2 = 0;  // b''
  Value value = 0;
  friend bool operator==(const DecideEvent&, const DecideEvent&) = default;
};

struct CoreStepOutcome {
  Round round = 0;
  ProcessId pid = 0;
  std::optional<LockEvent> locked;
  std::optional<DecideEvent> decided;
  friend bool operator==(const CoreStepOutcome&,
                         const CoreStepOutcome&) = default;
};

// A run of rounds [a, b] on which the approximation is `root`-single-rooted.
struct SingleRun {
  ProcessSet root;
  Round a = 0;
  Round b = 0;
  friend bool operator==(const SingleRun&, const SingleRun&) = default;
};

struct CoreStepOptions {
  bool skip_c3 = false;  // deliberately broken variant for oracle smoke tests
};

// A root of approx[r] is confirmed once every member has an outgoing edge
// in some approx[t], t > r; unconfirmed roots may stem from in-edges p has
// not learned yet.

// The single confirmed root of approx[m-D], if there is exactly one.
std::optional<ProcessSet> c1_check(const NodeState& s, Round m, int D);
LockEvent b1_apply(NodeState& s, Round m, ProcessSet root, int D);

// All [a', a'+D] runs, by a'. Round r counts for R' when R' is a root of
// approx[r] and no other root of approx[r] is confirmed.
std::vector<SingleRun> c2_candidates(const NodeState& s, int D);
std::optional<SingleRun> c2_check(const NodeState& s, int D);
bool c3_check(const NodeState& s, ProcessSet root, Round b);
// No-op (nullopt) if s already decided.
std::optional<DecideEvent> b3_apply(NodeState& s, const SingleRun& run);

// Maximal [a, b] containing [lo, hi] on which `root` is a root of every
// approx[r]; rounds below 1 and outside the held range are not considered.
// Requires root to be a root on [lo, hi].
std::pair<Round, Round> maximal_common_root(const NodeState& s,
                                            ProcessSet root, Round lo,
                                            Round hi);

// One round-m core computation; empty for m <= D. Requires s.m() == m.
CoreStepOutcome core_step(NodeState& s, Round m, int D,
                          CoreStepOptions opts = {});

}  // namespace msgadv
