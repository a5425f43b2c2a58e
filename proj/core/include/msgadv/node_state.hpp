// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msgadv/graph.hpp"

namespace msgadv {

// Full information, or only the last k rounds in messages and memory.
struct HistoryMode {
  int bounded_k = 0;  // 0 means full

  static HistoryMode full() { return {}; }
  static HistoryMode bounded(int k);
  bool is_bounded() const { return bounded_k > 0; }

  // "full" or "bounded:K"
  std::string to_string() const;
  static HistoryMode parse(std::string_view s);

  friend bool operator==(HistoryMode, HistoryMode) = default;
};

// Entry q-1 holds lock[q][r]; missing trailing entries are ⊥.
using LockRow = std::vector<std::optional<Value>>;

std::optional<Value> lock_at(const LockRow& row, ProcessId q);
bool same_locks(const LockRow& a, const LockRow& b);

// Everything a process knows about one round r: its view of G^r and the
// lock values lock[*][r].
struct RoundView {
  PartialGraph approx;
  LockRow locks;

  friend bool operator==(const RoundView& a, const RoundView& b) {
    return a.approx == b.approx && same_locks(a.locks, b.locks);
  }
};

// Broadcast in round `round`; carries the sender's state at the end of
// round - 1, restricted to rounds first .. round-1.
struct Message {
  ProcessId sender = 0;
  Round round = 0;
  Round first = 0;
  std::vector<RoundView> rounds;
};

class NodeState {
 public:
  NodeState() = default;
  NodeState(ProcessId pid, Value x, HistoryMode mode = {});
  // Rebuilds a state from stored rows for rounds first .. first+views-1.
  static NodeState restore(ProcessId pid, Value x, std::optional<Value> y,
                           HistoryMode mode, Round first,
                           std::vector<RoundView> views);

  ProcessId pid() const { return pid_; }
  Round m() const { return m_; }
  Value x() const { return x_; }
  const std::optional<Value>& y() const { return y_; }
  HistoryMode mode() const { return mode_; }

  // Earliest round still held (0 unless pruned).
  Round first_round() const { return first_; }
  bool retains(Round r) const { return r >= first_ && r <= m_; }

  // Throw InvalidArgument for rounds not held.
  const PartialGraph& approx(Round r) const;
  const RoundView& view(Round r) const;

  // ⊥ (nullopt) for unknown processes and rounds not held.
  std::optional<Value> lock(ProcessId q, Round r) const;

  // Rejects overwriting a different non-⊥ value with InvariantViolation.
  void set_lock(ProcessId q, Round r, Value v);
  // Only lock[pid][m] of the current round may be reassigned (branch b1).
  void set_own_proposal(Value v);

  // Write-once; a second call throws InvariantViolation.
  void decide(Value v);

  // Starts round m = m()+1: empty approx[m], lock[pid][m] := lock[pid][m-1].
  void begin_round();
  PartialGraph& approx_mut(Round r);
  // Forget rounds < r.
  void drop_before(Round r);

  friend bool operator==(const NodeState&, const NodeState&) = default;

 private:
  RoundView& view_mut(Round r);

  ProcessId pid_ = 0;
  Round m_ = 0;
  Value x_ = 0;
  std::optional<Value> y_;
  HistoryMode mode_;
  Round first_ = 0;
  std::vector<RoundView> views_;  // rounds first_ .. m_
};

NodeState init_state(ProcessId pid, Value x, HistoryMode mode = {});

// Snapshot of s for broadcast in round s.m() + 1.
Message make_message(const NodeState& s);

// Round-m delivery: msgs are the messages of all in-neighbours in G^m
// (including s's own). Requires s.m() == m - 1.
void receive_and_merge(NodeState& s, std::span<const Message* const> msgs,
                       Round m);

// Some round r'' in (r, m] holds an edge leaving q.
bool has_late_outgoing_edge(const NodeState& s, ProcessId q, Round r);

std::vector<ProcessSet> detected_roots(const NodeState& s, Round r);

// Forget rounds < m - keep.
void prune(NodeState& s, int keep);

}  // namespace msgadv
