// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/consensus.hpp"

#include <algorithm>
#include <array>

namespace msgadv {

namespace {

Round lowest_round(const NodeState& s) {
  return std::max<Round>(1, s.first_round());
}

// Latest known round with an outgoing edge of each process, so that
// "q has an outgoing edge in some approx[t], t > r" is last[q-1] > r.
class LateEdges {
 public:
  explicit LateEdges(const NodeState& s) {
    last_.fill(-1);
    for (Round t = s.first_round(); t <= s.m(); ++t) {
      const auto out = s.approx(t).out_masks();
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] != 0) last_[i] = t;
      }
    }
  }

  bool confirmed(ProcessSet root, Round r) const {
    bool ok = true;
    root.for_each([&](ProcessId q) { ok = ok && last_[q - 1] > r; });
    return ok;
  }

 private:
  std::array<Round, kMaxProcesses> last_{};
};

bool is_root_at(const NodeState& s, ProcessSet root, Round r) {
  const auto roots = detected_roots(s, r);
  return std::find(roots.begin(), roots.end(), root) != roots.end();
}

Value max_lock(const NodeState& s, ProcessSet root, Round a,
               const char* branch) {
  std::optional<Value> best;
  root.for_each([&](ProcessId q) {
    const auto v = s.lock(q, a);
    if (!v) {
      throw InvariantViolation(s.pid(), s.m(),
                               std::string(branch) + ": lock[" +
                                   std::to_string(q) + "][" +
                                   std::to_string(a) + "] is bottom");
    }
    best = best ? std::max(*best, *v) : *v;
  });
  return *best;
}

}  // namespace

std::pair<Round, Round> maximal_common_root(const NodeState& s,
                                            ProcessSet root, Round lo,
                                            Round hi) {
  Round a = lo;
  while (a - 1 >= lowest_round(s) && is_root_at(s, root, a - 1)) --a;
  Round b = hi;
  while (b + 1 <= s.m() && is_root_at(s, root, b + 1)) ++b;
  return {a, b};
}

std::optional<ProcessSet> c1_check(const NodeState& s, Round m, int D) {
  const Round r = m - D;
  if (r < lowest_round(s)) return std::nullopt;
  const LateEdges late(s);
  std::optional<ProcessSet> found;
  for (ProcessSet root : detected_roots(s, r)) {
    if (!late.confirmed(root, r)) continue;
    if (found) return std::nullopt;
    found = root;
  }
  return found;
}

LockEvent b1_apply(NodeState& s, Round m, ProcessSet root, int D) {
  const Round a = maximal_common_root(s, root, m - D, m - D).first;
  const Value v = max_lock(s, root, a, "b1");
  s.set_own_proposal(v);
  return {root, a, v};
}

std::vector<SingleRun> c2_candidates(const NodeState& s, int D) {
  const LateEdges late(s);
  std::vector<SingleRun> out;
  std::vector<std::pair<ProcessSet, Round>> runs;  // candidate root, run length
  for (Round r = lowest_round(s); r <= s.m(); ++r) {
    const auto roots = detected_roots(s, r);
    std::vector<ProcessSet> confirmed;
    for (ProcessSet root : roots) {
      if (late.confirmed(root, r)) confirmed.push_back(root);
    }
    // Unconfirmed roots may be artefacts of missing in-edges, so only a
    // second confirmed root rules R' out.
    std::vector<ProcessSet> cands;
    if (confirmed.size() == 1) {
      cands = confirmed;
    } else if (confirmed.empty()) {
      cands = roots;
    }
    std::vector<std::pair<ProcessSet, Round>> next;
    for (ProcessSet root : cands) {
      Round len = 1;
      for (const auto& [prev, l] : runs) {
        if (prev == root) len = l + 1;
      }
      next.emplace_back(root, len);
      if (len >= D + 1) out.push_back({root, r - D, r});
    }
    runs = std::move(next);
  }
  return out;
}

std::optional<SingleRun> c2_check(const NodeState& s, int D) {
  auto c = c2_candidates(s, D);
  if (c.empty()) return std::nullopt;
  return c.front();
}

bool c3_check(const NodeState& s, ProcessSet root, Round b) {
  bool ok = true;
  root.for_each(
      [&](ProcessId q) { ok = ok && has_late_outgoing_edge(s, q, b); });
  return ok;
}

std::optional<DecideEvent> b3_apply(NodeState& s, const SingleRun& run) {
  if (s.y()) return std::nullopt;
  const auto [a2, b2] = maximal_common_root(s, run.root, run.a, run.b);
  const Value v = max_lock(s, run.root, a2, "b3");
  s.decide(v);
  return DecideEvent{run.root, run.a, run.b, a2, b2, v};
}

CoreStepOutcome core_step(NodeState& s, Round m, int D,
                          CoreStepOptions opts) {
  if (s.m() != m) {
    throw InvalidArgument("core step for round " + std::to_string(m) +
                          " on state at round " + std::to_string(s.m()));
  }
  CoreStepOutcome out{m, s.pid(), std::nullopt, std::nullopt};
  if (m <= D) return out;
  if (auto root = c1_check(s, m, D)) out.locked = b1_apply(s, m, *root, D);
  if (s.y()) return out;
  for (const SingleRun& run : c2_candidates(s, D)) {
    if (opts.skip_c3 || c3_check(s, run.root, run.b)) {
      out.decided = b3_apply(s, run);
      break;
    }
  }
  return out;
}

}  // namespace msgadv
