// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/causal.hpp"

#include <algorithm>

namespace msgadv {

namespace {

void check_span(const RoundWindow& w, ProcessId p, Round a, Round b) {
  check_process_id(p, w.lasso().n());
  if (a > b || a < w.a() - 1 || b > w.b()) {
    throw InvalidArgument("causal interval [" + std::to_string(a) + "," +
                          std::to_string(b) + "] not inside window");
  }
}

// Processes reached from `from` (end of round a) by the end of round b.
std::uint64_t reach(const LassoSequence& l, std::uint64_t from, Round a,
                    Round b) {
  std::uint64_t cur = from;
  for (Round r = a + 1; r <= b; ++r) {
    const auto out = l.graph(r).out_masks();
    std::uint64_t next = 0;
    for (std::uint64_t m = cur; m != 0; m &= m - 1) {
      next |= out[std::countr_zero(m)];
    }
    cur = next;
  }
  return cur;
}

}  // namespace

ProcessSet causal_past(const RoundWindow& w, ProcessId p, Round a, Round b) {
  check_span(w, p, a, b);
  ProcessSet cp = ProcessSet::single(p);
  for (Round l = b; l > a; --l) {
    const CommGraph& g = w.graph(l);
    ProcessSet grown = cp;
    cp.for_each([&](ProcessId q2) { grown |= g.in(q2); });
    cp = grown;
  }
  return cp;
}

ProcessSet causal_past_forward(const RoundWindow& w, ProcessId p, Round a,
                               Round b) {
  check_span(w, p, a, b);
  ProcessSet cp;
  for (ProcessId q = 1; q <= w.lasso().n(); ++q) {
    if (reach(w.lasso(), ProcessSet::single(q).mask(), a, b) &
        ProcessSet::single(p).mask()) {
      cp.insert(q);
    }
  }
  return cp;
}

bool influences(const RoundWindow& w, ProcessId q, Round r, ProcessId p,
                Round r2) {
  return causal_past(w, p, r, r2).contains(q);
}

Round diameter_horizon(const LassoSequence& l, int D) {
  return std::max(l.default_horizon(), l.prefix_length() +
                                           (D + 2) * l.cycle_length() +
                                           2 * l.n());
}

std::optional<DiameterWitness> check_dynamic_diameter(const LassoSequence& l,
                                                      int D, Round horizon) {
  const int n = l.n();
  if (D < 1 || D > n - 1) {
    throw InvalidArgument("D must satisfy 1 <= D <= n-1 (D=" +
                          std::to_string(D) + ", n=" + std::to_string(n) + ")");
  }
  if (horizon <= 0) horizon = diameter_horizon(l, D);
  const std::uint64_t everyone = ProcessSet::all(n).mask();
  for (Round r1 = 1; r1 <= horizon; ++r1) {
    const ProcessSet root = l.single_root(r1);
    if (root.empty()) continue;
    std::vector<Round> rounds{r1};
    for (Round r = r1 + 1; r <= horizon && std::ssize(rounds) < D; ++r) {
      if (l.single_root(r) == root) rounds.push_back(r);
    }
    if (std::ssize(rounds) < D) continue;
    // R is in every CP_p iff every member of R reaches every p.
    std::uint64_t reached_by_all = everyone;
    root.for_each([&](ProcessId q) {
      reached_by_all &=
          reach(l, ProcessSet::single(q).mask(), r1 - 1, rounds.back());
    });
    if (reached_by_all == everyone) continue;
    const ProcessId p =
        ProcessSet::from_mask(everyone & ~reached_by_all).min();
    RoundWindow w(l, r1, rounds.back());
    const ProcessSet cp = causal_past(w, p, r1 - 1, rounds.back());
    return DiameterWitness{root, rounds, p, root - cp};
  }
  return std::nullopt;
}

}  // namespace msgadv
