// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msgadv/generators.hpp"
#include "msgadv/harness.hpp"

namespace msgadv {

struct FuzzParams {
  AdversaryKind adversary = AdversaryKind::kEStable;  // or kAltEStable
  int trials = 100;
  int n_min = 2;
  int n_max = 8;
  int d_min = 1;
  int d_max = 3;
  Round rsr_max = 12;
  Value input_min = 0;
  Value input_max = 9;
  std::uint64_t seed = 1;
  int jobs = 1;
  CoreStepOptions core;
  // EStable only: rerun in bounded(2D+1) mode and compare decisions, and
  // check the AltEStable / VSRC(4D) / MAD(D,D) containments.
  bool extra_checks = true;

  void validate() const;  // throws InvalidArgument
};

struct TrialResult {
  int index = 0;
  std::uint64_t trial_seed = 0;
  int n = 0;
  int D = 0;
  std::vector<Value> inputs;
  AdversaryCertificate certificate;
  AdversaryCertificate planted;
  bool spurious_root = false;  // AltEStable: an earlier short-lived root was planted
  int generator_attempts = 0;
  Round deadline = 0;
  std::optional<Round> latest_decision_round;
  OracleReport report;
  // Reported separately; does not fail the trial.
  std::optional<bool> bounded_matches;    // EStable with extra checks
  std::optional<bool> containment_holds;  // EStable with extra checks
  std::string failure;  // empty when the trial passed

  bool passed() const { return failure.empty(); }
};

struct FuzzSummary {
  FuzzParams params;
  int trials = 0;
  int passed = 0;
  int bounded_mismatches = 0;
  int containment_failures = 0;
  int invariant_failures = 0;
  std::optional<TrialResult> first_failure;
  std::optional<std::uint64_t> first_bounded_mismatch;  // trial seed
  std::vector<TrialResult> results;  // by trial index
};

// Seed of trial `index` in a campaign seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int index);

// One trial, fully determined by (params ranges, trial seed).
TrialResult run_trial(const FuzzParams& p, std::uint64_t trial_seed,
                      int index = 0);

// The trial's execution configuration, for replay and trace dumps.
RunConfig trial_config(const FuzzParams& p, std::uint64_t trial_seed);

FuzzSummary fuzz_campaign(const FuzzParams& p);

}  // namespace msgadv
