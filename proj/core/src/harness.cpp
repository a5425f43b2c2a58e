// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/harness.hpp"

#include <algorithm>

namespace msgadv {

void RunConfig::validate() const {
  if (lasso.n() != n) {
    throw InvalidArgument("lasso has n=" + std::to_string(lasso.n()) +
                          " but config says n=" + std::to_string(n));
  }
  check_diameter_param(n, D);
  if (std::ssize(inputs) != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " inputs, got " +
                          std::to_string(inputs.size()));
  }
  if (horizon == 0 && !certificate) {
    throw InvalidArgument("no horizon given and no certificate to derive it");
  }
  if (horizon < 0) throw InvalidArgument("horizon must be >= 0");
}

std::optional<Round> RunConfig::deadline() const {
  if (!certificate) return std::nullopt;
  return certificate->deadline();
}

Round RunConfig::resolved_horizon() const {
  if (horizon > 0) return horizon;
  return *deadline() + D + 2;
}

std::optional<AdversaryCertificate> find_certificate(const LassoSequence& l,
                                                     int D) {
  if (auto r = check_estable(l, D); r.ok) return r.certificate;
  if (auto r = check_alt_estable(l, D); r.ok) return r.certificate;
  return std::nullopt;
}

const NodeState& Trace::state(ProcessId p, Round r) const {
  if (r == 0) return initial_states.at(static_cast<std::size_t>(p - 1));
  const auto& rec = rounds.at(static_cast<std::size_t>(r - 1));
  if (rec.states.empty()) throw InvalidArgument("trace has no recorded states");
  return rec.states.at(static_cast<std::size_t>(p - 1));
}

std::optional<Round> Trace::latest_decision_round() const {
  std::optional<Round> out;
  for (const auto& d : decisions) out = std::max(out.value_or(0), d.round);
  return out;
}

std::optional<Round> Trace::earliest_decision_round() const {
  if (decisions.empty()) return std::nullopt;
  return decisions.front().round;
}

namespace {

// Ground truth kept alongside the simulation for the per-round checks.
class InvariantMonitor {
 public:
  explicit InvariantMonitor(int n)
      : n_(n),
        latest_(static_cast<std::size_t>(n * n), -1),
        checked_(static_cast<std::size_t>(n * n), -1),
        own_(static_cast<std::size_t>(n)) {
    for (ProcessId p = 1; p <= n; ++p) at(latest_, p, p) = 0;
  }

  void record_own_locks(const std::vector<NodeState>& states) {
    for (const NodeState& s : states) {
      own_[static_cast<std::size_t>(s.pid() - 1)].push_back(s.lock(s.pid(), s.m()));
    }
  }

  void advance(const CommGraph& g, Round m) {
    std::vector<Round> next(latest_.size(), -1);
    for (ProcessId p = 1; p <= n_; ++p) {
      g.in(p).for_each([&](ProcessId u) {
        for (ProcessId q = 1; q <= n_; ++q) {
          at(next, p, q) = std::max(at(next, p, q), at(latest_, u, q));
        }
      });
      at(next, p, p) = m;
    }
    latest_ = std::move(next);
  }

  void check(const std::vector<NodeState>& states, const RunConfig& cfg,
             Round m) {
    for (const NodeState& s : states) {
      const ProcessId p = s.pid();
      for (Round r = std::max<Round>(1, s.first_round()); r <= m; ++r) {
        if (!s.approx(r).subset_of(cfg.lasso.graph(r))) {
          throw InvariantViolation(p, m, "approx[" + std::to_string(r) +
                                             "] has an edge not in G^r");
        }
      }
      for (Round r = s.first_round(); r <= m; ++r) {
        if (!s.lock(p, r)) {
          throw InvariantViolation(p, m, "own lock[" + std::to_string(p) +
                                             "][" + std::to_string(r) +
                                             "] is bottom");
        }
      }
      // q's state at round latest(p,q) reached p, so p must know q's own
      // lock values up to that round. Bounded messages drop old rounds, so
      // this only holds with full information.
      if (cfg.mode.is_bounded()) continue;
      for (ProcessId q = 1; q <= n_; ++q) {
        const Round upto = at(latest_, p, q);
        for (Round r = std::max(at(checked_, p, q) + 1, s.first_round());
             r <= upto; ++r) {
          const auto truth = own_[static_cast<std::size_t>(q - 1)]
                                 [static_cast<std::size_t>(r)];
          if (s.lock(q, r) != truth) {
            throw InvariantViolation(
                p, m, "lock[" + std::to_string(q) + "][" + std::to_string(r) +
                          "] differs from q's own value although q's round " +
                          std::to_string(upto) + " state reached p");
          }
        }
        at(checked_, p, q) = std::max(at(checked_, p, q), upto);
      }
    }
  }

 private:
  Round& at(std::vector<Round>& v, ProcessId p, ProcessId q) {
    return v[static_cast<std::size_t>((p - 1) * n_ + (q - 1))];
  }

  int n_;
  std::vector<Round> latest_;   // latest[p][q]: newest q-round known at p
  std::vector<Round> checked_;  // rounds already compared
  std::vector<std::vector<std::optional<Value>>> own_;  // own_[q][r]
};

}  // namespace

Trace run_execution(const RunConfig& cfg) {
  cfg.validate();
  Trace t;
  t.config = cfg;
  const int n = cfg.n;
  const Round horizon = cfg.resolved_horizon();
  std::vector<NodeState> states;
  for (ProcessId p = 1; p <= n; ++p) {
    states.push_back(init_state(p, cfg.inputs[static_cast<std::size_t>(p - 1)],
                                cfg.mode));
  }
  t.initial_states = states;
  InvariantMonitor monitor(n);
  monitor.record_own_locks(states);

  std::vector<Message> msgs(static_cast<std::size_t>(n));
  std::vector<const Message*> inbox;
  Round m = 1;
  try {
    for (; m <= horizon; ++m) {
      const CommGraph& g = cfg.lasso.graph(m);
      RoundRecord rec;
      rec.round = m;
      rec.graph = g;
      for (ProcessId p = 1; p <= n; ++p) {
        msgs[static_cast<std::size_t>(p - 1)] =
            make_message(states[static_cast<std::size_t>(p - 1)]);
      }
      for (ProcessId p = 1; p <= n; ++p) {
        NodeState& s = states[static_cast<std::size_t>(p - 1)];
        inbox.clear();
        g.in(p).for_each([&](ProcessId q) {
          inbox.push_back(&msgs[static_cast<std::size_t>(q - 1)]);
        });
        receive_and_merge(s, inbox, m);
        if (cfg.check_invariants) {
          ProcessSet senders;
          for (const Message* msg : inbox) senders.insert(msg->sender);
          if (senders != g.in(p)) {
            throw InvariantViolation(p, m, "delivered senders differ from G^m");
          }
        }
        const bool had = s.y().has_value();
        rec.outcomes.push_back(core_step(s, m, cfg.D, cfg.core));
        if (!had && s.y()) {
          const DecisionEvent d{p, m, *s.y()};
          rec.decisions.push_back(d);
          t.decisions.push_back(d);
        }
        if (cfg.mode.is_bounded()) prune(s, cfg.mode.bounded_k);
      }
      monitor.record_own_locks(states);
      monitor.advance(g, m);
      if (cfg.check_invariants) monitor.check(states, cfg, m);
      if (cfg.record_states) rec.states = states;
      t.rounds.push_back(std::move(rec));
    }
  } catch (const InvariantViolation& e) {
    t.failure = RunFailure{e.pid(), e.round(), e.what()};
  }
  t.final_states = std::move(states);
  return t;
}

OracleReport oracle_check(const Trace& t, Round deadline) {
  OracleReport rep;
  rep.deadline = deadline;
  rep.failure = t.failure;
  rep.latest_decision_round = t.latest_decision_round();
  const int n = t.config.n;
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::optional<Round>> when(static_cast<std::size_t>(n) + 1);
  for (const DecisionEvent& d : t.decisions) {
    if (++count[static_cast<std::size_t>(d.pid)] > 1) {
      rep.double_decisions.push_back(d);
      rep.agreement = false;
    }
    when[static_cast<std::size_t>(d.pid)] = d.round;
    if (std::find(t.config.inputs.begin(), t.config.inputs.end(), d.value) ==
        t.config.inputs.end()) {
      rep.validity = false;
      if (rep.validity_witness.empty()) rep.validity_witness.push_back(d);
    }
  }
  for (std::size_t i = 1; i < t.decisions.size() && rep.agreement_witness.empty(); ++i) {
    if (t.decisions[i].value != t.decisions.front().value) {
      rep.agreement = false;
      rep.agreement_witness = {t.decisions.front(), t.decisions[i]};
    }
  }
  for (ProcessId p = 1; p <= n; ++p) {
    const auto w = when[static_cast<std::size_t>(p)];
    if (!w || *w > deadline) {
      rep.termination = false;
      rep.undecided_by_deadline.push_back(p);
    }
  }
  return rep;
}

bool indistinguishable(const Trace& a, const Trace& b, ProcessId p,
                       Round through) {
  for (Round r = 0; r <= through; ++r) {
    if (!(a.state(p, r) == b.state(p, r))) return false;
  }
  return true;
}

}  // namespace msgadv
