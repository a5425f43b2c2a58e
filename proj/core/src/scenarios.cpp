// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/scenarios.hpp"

namespace msgadv {

namespace {

struct EpsGraphs {
  CommGraph g, g1, g2, g3;  // G, G', G'', G'''
};

EpsGraphs eps_graphs(int n, int D) {
  // chain: 1 -> n -> n-1 -> ... -> n-D+2 -> 2
  std::vector<ProcessId> chain{1};
  for (int i = 0; i < D - 1; ++i) chain.push_back(n - i);
  chain.push_back(2);
  ProcessSet in_chain(chain);
  ProcessSet extras = ProcessSet::all(n) - in_chain - ProcessSet{3, 4};

  CommGraph base(n);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    base.add_edge(chain[i], chain[i + 1]);
  }
  EpsGraphs out{base, base, base, base};
  extras.for_each([&](ProcessId e) {
    out.g.add_edge(1, e);
    out.g1.add_edge(1, e);
    out.g2.add_edge(1, e);
    out.g3.add_edge(1, e);
    out.g3.add_edge(4, e);
  });
  out.g.add_edge(1, 3);
  out.g.add_edge(1, 4);
  out.g1.add_edge(3, 4);
  for (CommGraph* h : {&out.g2, &out.g3}) {
    h->add_edge(2, 1);
    h->add_edge(4, 3);
  }
  out.g3.add_edge(4, 1);
  out.g3.add_edge(4, chain[1]);
  return out;
}

RunConfig make_config(int n, int D, std::vector<Value> inputs,
                      LassoSequence l) {
  RunConfig cfg;
  cfg.n = n;
  cfg.D = D;
  cfg.inputs = std::move(inputs);
  cfg.lasso = std::move(l);
  cfg.certificate = find_certificate(cfg.lasso, D);
  return cfg;
}

}  // namespace

EpsPair scenario_eps_pair(int n, int D, Round prefix_len) {
  if (n < 4) throw InvalidArgument("eps-pair requires n >= 4");
  if (D < 1 || D > n - 3) {
    throw InvalidArgument("eps-pair requires 1 <= D <= n-3");
  }
  if (prefix_len < 0) throw InvalidArgument("prefix length must be >= 0");
  const EpsGraphs gs = eps_graphs(n, D);
  std::vector<CommGraph> pi;
  for (Round r = 1; r <= prefix_len; ++r) {
    pi.push_back((prefix_len - r) % 2 == 0 ? gs.g2 : gs.g1);
  }
  std::vector<CommGraph> prime = pi;
  for (int i = 0; i < D; ++i) prime.push_back(gs.g1);
  for (int i = 0; i < D; ++i) prime.push_back(gs.g2);

  std::vector<Value> zeros(static_cast<std::size_t>(n), 0);
  std::vector<Value> mixed = zeros;
  mixed[2] = 1;
  mixed[3] = 1;
  EpsPair out{make_config(n, D, zeros, LassoSequence(pi, {gs.g})),
              make_config(n, D, mixed, LassoSequence(prime, {gs.g3}))};
  out.eps.record_states = true;
  out.eps_prime.record_states = true;
  return out;
}

StabPair scenario_stab_not_enough(int n, Round tau, int D) {
  if (n < 2) throw InvalidArgument("stab-not-enough requires n >= 2");
  if (tau < 1) throw InvalidArgument("tau must be >= 1");
  check_diameter_param(n, D);
  CommGraph forward(n);
  for (ProcessId p = 1; p < n; ++p) forward.add_edge(p, p + 1);
  CommGraph isolated(n);
  for (ProcessId p = n; p > 2; --p) isolated.add_edge(p, p - 1);
  CommGraph backward = isolated;
  backward.add_edge(2, 1);

  std::vector<Value> inputs(static_cast<std::size_t>(n), 1);
  inputs[0] = 0;
  const Round horizon = n + 2 * D + 2 + tau;
  StabPair out;
  out.eps1 = make_config(n, D, inputs, LassoSequence({}, {forward}));
  out.eps2 = make_config(
      n, D, inputs,
      LassoSequence(std::vector<CommGraph>(static_cast<std::size_t>(tau), isolated),
                    {backward}));
  out.eps1.horizon = horizon;
  out.eps2.horizon = horizon;
  return out;
}

LassoSequence scenario_hop_fallacy(int n) {
  if (n < 4) throw InvalidArgument("hop-fallacy requires n >= 4");
  auto tree = [n](ProcessId mid) {
    CommGraph g(n);
    g.add_edge(1, mid);
    for (ProcessId q = 2; q <= n; ++q) {
      if (q != mid) g.add_edge(mid, q);
    }
    return g;
  };
  std::vector<CommGraph> cycle;
  for (ProcessId mid = 3; mid <= n; ++mid) cycle.push_back(tree(mid));
  cycle.push_back(tree(3));
  return LassoSequence({}, std::move(cycle));
}

RunConfig scenario_bounded_gap(int k) {
  constexpr int n = 4;
  constexpr int D = 2;
  if (k < 1) throw InvalidArgument("k must be >= 1");
  CommGraph broadcast(n);
  for (ProcessId q = 2; q <= n; ++q) broadcast.add_edge(1, q);
  CommGraph gap(n, {{2, 3}, {4, 3}});
  std::vector<CommGraph> prefix(D + 1, broadcast);
  for (int i = 0; i < k - 1; ++i) prefix.push_back(gap);
  prefix.push_back(broadcast);  // r_1
  prefix.push_back(gap);
  RunConfig cfg = make_config(n, D, {3, 1, 4, 1}, LassoSequence(prefix, {broadcast}));
  // The EStable deadline is later; the point here is the r_D deadline.
  cfg.certificate = check_alt_estable(cfg.lasso, D).certificate;
  return cfg;
}

}  // namespace msgadv
