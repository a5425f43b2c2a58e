// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/node_state.hpp"

#include <algorithm>
#include <charconv>

namespace msgadv {

HistoryMode HistoryMode::bounded(int k) {
  if (k < 1) throw InvalidArgument("bounded history needs k >= 1");
  return HistoryMode{k};
}

std::string HistoryMode::to_string() const {
  return is_bounded() ? "bounded:" + std::to_string(bounded_k) : "full";
}

HistoryMode HistoryMode::parse(std::string_view s) {
  if (s == "full") return full();
  constexpr std::string_view prefix = "bounded:";
  if (s.substr(0, prefix.size()) == prefix) {
    const auto digits = s.substr(prefix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 1) {
      return bounded(k);
    }
  }
  throw InvalidArgument("mode must be 'full' or 'bounded:K' with K >= 1, got '" +
                        std::string(s) + "'");
}

std::optional<Value> lock_at(const LockRow& row, ProcessId q) {
  const auto i = static_cast<std::size_t>(q - 1);
  return q >= 1 && i < row.size() ? row[i] : std::nullopt;
}

bool same_locks(const LockRow& a, const LockRow& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto q = static_cast<ProcessId>(i + 1);
    if (lock_at(a, q) != lock_at(b, q)) return false;
  }
  return true;
}

NodeState::NodeState(ProcessId pid, Value x, HistoryMode mode)
    : pid_(pid), x_(x), mode_(mode) {
  if (pid < 1 || pid > kMaxProcesses) {
    throw InvalidArgument("process id " + std::to_string(pid) + " out of range");
  }
  views_.emplace_back();
  set_lock(pid, 0, x);
}

NodeState NodeState::restore(ProcessId pid, Value x, std::optional<Value> y,
                             HistoryMode mode, Round first,
                             std::vector<RoundView> views) {
  if (views.empty() || first < 0) {
    throw InvalidArgument("restore needs at least one round from 0 on");
  }
  NodeState s(pid, x, mode);
  s.y_ = y;
  s.first_ = first;
  s.m_ = first + static_cast<Round>(views.size()) - 1;
  s.views_ = std::move(views);
  return s;
}

NodeState init_state(ProcessId pid, Value x, HistoryMode mode) {
  return NodeState(pid, x, mode);
}

const RoundView& NodeState::view(Round r) const {
  if (!retains(r)) {
    throw InvalidArgument("p" + std::to_string(pid_) + " holds no round " +
                          std::to_string(r));
  }
  return views_[static_cast<std::size_t>(r - first_)];
}

RoundView& NodeState::view_mut(Round r) {
  return const_cast<RoundView&>(std::as_const(*this).view(r));
}

const PartialGraph& NodeState::approx(Round r) const { return view(r).approx; }

PartialGraph& NodeState::approx_mut(Round r) { return view_mut(r).approx; }

std::optional<Value> NodeState::lock(ProcessId q, Round r) const {
  if (!retains(r)) return std::nullopt;
  return lock_at(views_[static_cast<std::size_t>(r - first_)].locks, q);
}

void NodeState::set_lock(ProcessId q, Round r, Value v) {
  if (q < 1 || q > kMaxProcesses) {
    throw InvalidArgument("process id " + std::to_string(q) + " out of range");
  }
  LockRow& row = view_mut(r).locks;
  const auto i = static_cast<std::size_t>(q - 1);
  if (row.size() <= i) row.resize(i + 1);
  if (row[i] && *row[i] != v) {
    throw InvariantViolation(pid_, m_,
                             "conflicting values " + std::to_string(*row[i]) +
                                 " and " + std::to_string(v) + " for lock[" +
                                 std::to_string(q) + "][" + std::to_string(r) +
                                 "]");
  }
  row[i] = v;
}

void NodeState::set_own_proposal(Value v) {
  LockRow& row = view_mut(m_).locks;
  const auto i = static_cast<std::size_t>(pid_ - 1);
  if (row.size() <= i) row.resize(i + 1);
  row[i] = v;
}

void NodeState::decide(Value v) {
  if (y_) {
    throw InvariantViolation(pid_, m_, "second decision (had " +
                                           std::to_string(*y_) + ", now " +
                                           std::to_string(v) + ")");
  }
  y_ = v;
}

void NodeState::begin_round() {
  const std::optional<Value> own = lock(pid_, m_);
  ++m_;
  views_.emplace_back();
  if (own) set_lock(pid_, m_, *own);
}

void NodeState::drop_before(Round r) {
  if (r <= first_) return;
  r = std::min(r, m_);
  views_.erase(views_.begin(), views_.begin() + (r - first_));
  first_ = r;
}

Message make_message(const NodeState& s) {
  Message msg;
  msg.sender = s.pid();
  msg.round = s.m() + 1;
  msg.first = s.first_round();
  if (s.mode().is_bounded()) {
    msg.first = std::max(msg.first, s.m() - s.mode().bounded_k + 1);
  }
  for (Round r = msg.first; r <= s.m(); ++r) msg.rounds.push_back(s.view(r));
  return msg;
}

void receive_and_merge(NodeState& s, std::span<const Message* const> msgs,
                       Round m) {
  if (s.m() != m - 1) {
    throw InvalidArgument("p" + std::to_string(s.pid()) + " at round " +
                          std::to_string(s.m()) + " cannot merge round " +
                          std::to_string(m));
  }
  s.begin_round();
  for (const Message* msg : msgs) {
    if (msg->round != m) {
      throw InvalidArgument("message for round " + std::to_string(msg->round) +
                            " delivered in round " + std::to_string(m));
    }
    s.approx_mut(m).add_edge(msg->sender, s.pid());
    for (std::size_t i = 0; i < msg->rounds.size(); ++i) {
      const Round r = msg->first + static_cast<Round>(i);
      if (!s.retains(r)) continue;
      const RoundView& in = msg->rounds[i];
      s.approx_mut(r).merge(in.approx);
      for (std::size_t q = 0; q < in.locks.size(); ++q) {
        if (in.locks[q]) s.set_lock(static_cast<ProcessId>(q + 1), r, *in.locks[q]);
      }
    }
  }
}

bool has_late_outgoing_edge(const NodeState& s, ProcessId q, Round r) {
  for (Round t = std::max(r + 1, s.first_round()); t <= s.m(); ++t) {
    if (s.approx(t).has_out_edge(q)) return true;
  }
  return false;
}

std::vector<ProcessSet> detected_roots(const NodeState& s, Round r) {
  return s.approx(r).roots(s.pid());
}

void prune(NodeState& s, int keep) {
  if (keep < 0) throw InvalidArgument("keep must be >= 0");
  s.drop_before(s.m() - keep);
}

}  // namespace msgadv
