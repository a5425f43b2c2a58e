// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msgadv/adversary.hpp"
#include "msgadv/consensus.hpp"

namespace msgadv {

struct RunConfig {
  int n = 0;
  int D = 1;
  std::vector<Value> inputs;
  LassoSequence lasso;
  Round horizon = 0;  // 0: certificate deadline + D + 2
  HistoryMode mode;
  std::uint64_t seed = 0;
  CoreStepOptions core;
  bool record_states = false;
  bool check_invariants = true;
  // Source of the termination deadline.
  std::optional<AdversaryCertificate> certificate;

  // Throws InvalidArgument.
  void validate() const;
  Round resolved_horizon() const;
  std::optional<Round> deadline() const;
};

// EStable certificate if the lasso has one, otherwise AltEStable.
std::optional<AdversaryCertificate> find_certificate(const LassoSequence& l,
                                                     int D);

struct DecisionEvent {
  ProcessId pid = 0;
  Round round = 0;
  Value value = 0;
  friend bool operator==(const DecisionEvent&, const DecisionEvent&) = default;
};

struct RoundRecord {
  Round round = 0;
  CommGraph graph;
  std::vector<CoreStepOutcome> outcomes;  // by pid
  std::vector<DecisionEvent> decisions;
  std::vector<NodeState> states;  // end of round, if recorded
};

struct RunFailure {
  ProcessId pid = 0;
  Round round = 0;
  std::string what;
};

struct Trace {
  RunConfig config;
  std::vector<NodeState> initial_states;
  std::vector<RoundRecord> rounds;  // rounds 1..horizon (fewer on failure)
  std::vector<NodeState> final_states;
  std::vector<DecisionEvent> decisions;  // in order of occurrence
  std::optional<RunFailure> failure;

  const NodeState& state(ProcessId p, Round r) const;  // requires states
  std::optional<Round> latest_decision_round() const;
  std::optional<Round> earliest_decision_round() const;
};

// Lock-step simulation. Invariant violations stop the run and are reported
// in Trace::failure rather than thrown.
Trace run_execution(const RunConfig& cfg);

struct OracleReport {
  bool agreement = true;
  bool validity = true;
  bool termination = true;
  Round deadline = 0;
  std::optional<Round> latest_decision_round;
  std::vector<DecisionEvent> agreement_witness;    // two clashing decisions
  std::vector<DecisionEvent> validity_witness;     // decisions on non-inputs
  std::vector<ProcessId> undecided_by_deadline;
  std::vector<DecisionEvent> double_decisions;
  std::optional<RunFailure> failure;

  bool ok() const {
    return agreement && validity && termination && !failure;
  }
};

OracleReport oracle_check(const Trace& t, Round deadline);

// p's end-of-round state agrees in both traces for rounds 0..through.
// Both traces must have recorded states.
bool indistinguishable(const Trace& a, const Trace& b, ProcessId p,
                       Round through);

}  // namespace msgadv
