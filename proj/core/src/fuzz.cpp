// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace msgadv {

void FuzzParams::validate() const {
  if (adversary != AdversaryKind::kEStable &&
      adversary != AdversaryKind::kAltEStable) {
    throw InvalidArgument("fuzz supports the estable and altestable adversaries");
  }
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (n_min < 2 || n_min > n_max || n_max > kMaxProcesses) {
    throw InvalidArgument("n range must satisfy 2 <= n_min <= n_max <= 64");
  }
  if (d_min < 1 || d_min > d_max) {
    throw InvalidArgument("D range must satisfy 1 <= d_min <= d_max");
  }
  if (d_min > n_min - 1) {
    throw InvalidArgument("d_min must be <= n_min - 1");
  }
  if (rsr_max < 1) throw InvalidArgument("rsr_max must be >= 1");
  if (input_min > input_max) throw InvalidArgument("empty input range");
  if (jobs < 1) throw InvalidArgument("jobs must be >= 1");
}

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  return derive_seed(seed, static_cast<std::uint64_t>(index));
}

namespace {

struct Sampled {
  AdversaryParams adv;
  std::vector<Value> inputs;
};

Sampled sample(const FuzzParams& p, std::uint64_t seed) {
  Rng rng(seed);
  Sampled s;
  s.adv.n = rng.range(p.n_min, p.n_max);
  s.adv.D = rng.range(p.d_min, std::min(p.d_max, s.adv.n - 1));
  s.adv.rsr_target = rng.range(1, static_cast<int>(p.rsr_max));
  Round lo = 1;
  if (s.adv.n == 2) lo = std::max<Round>(1, s.adv.rsr_target - s.adv.D);
  s.adv.rgst_target =
      rng.range(static_cast<int>(lo), static_cast<int>(s.adv.rsr_target));
  s.adv.seed = rng.next();
  s.adv.spurious_root = rng.chance(1, 3);
  s.adv.consecutive_reappearances = rng.chance(1, 4);
  for (int i = 0; i < s.adv.n; ++i) {
    s.inputs.push_back(p.input_min +
                       static_cast<Value>(rng.below(static_cast<std::uint64_t>(
                           p.input_max - p.input_min + 1))));
  }
  return s;
}

struct TrialMeta {
  int attempts = 0;
  bool spurious = false;
  AdversaryCertificate planted;
};

RunConfig make_trial(const FuzzParams& p, std::uint64_t seed, TrialMeta& meta) {
  const Sampled s = sample(p, seed);
  GeneratedLasso gen = p.adversary == AdversaryKind::kEStable
                           ? generate_estable(s.adv)
                           : generate_alt_estable(s.adv);
  meta.attempts = gen.attempts;
  meta.spurious = p.adversary == AdversaryKind::kAltEStable && s.adv.spurious_root;
  meta.planted = gen.planted;
  RunConfig cfg;
  cfg.n = s.adv.n;
  cfg.D = s.adv.D;
  cfg.inputs = s.inputs;
  cfg.lasso = std::move(gen.lasso);
  cfg.seed = seed;
  cfg.core = p.core;
  cfg.certificate = gen.certificate;
  return cfg;
}

}  // namespace

RunConfig trial_config(const FuzzParams& p, std::uint64_t seed) {
  TrialMeta meta;
  return make_trial(p, seed, meta);
}

TrialResult run_trial(const FuzzParams& p, std::uint64_t seed, int index) {
  TrialResult res;
  res.index = index;
  res.trial_seed = seed;
  RunConfig cfg;
  TrialMeta meta;
  try {
    cfg = make_trial(p, seed, meta);
  } catch (const std::exception& e) {
    res.failure = std::string("generation: ") + e.what();
    return res;
  }
  res.generator_attempts = meta.attempts;
  res.spurious_root = meta.spurious;
  res.planted = meta.planted;
  res.n = cfg.n;
  res.D = cfg.D;
  res.inputs = cfg.inputs;
  res.certificate = *cfg.certificate;
  res.deadline = *cfg.deadline();

  const Trace t = run_execution(cfg);
  res.report = oracle_check(t, res.deadline);
  res.latest_decision_round = t.latest_decision_round();
  std::vector<std::string> why;
  if (t.failure) why.push_back("invariant: " + t.failure->what);
  if (!res.report.agreement) why.push_back("agreement");
  if (!res.report.validity) why.push_back("validity");
  if (!res.report.termination) why.push_back("termination");

  if (p.extra_checks && p.adversary == AdversaryKind::kEStable) {
    RunConfig bounded = cfg;
    bounded.mode = HistoryMode::bounded(2 * cfg.D + 1);
    const Trace tb = run_execution(bounded);
    res.bounded_matches = !tb.failure && tb.decisions == t.decisions;
    res.containment_holds = check_alt_estable(cfg.lasso, cfg.D).ok &&
                            check_vsrc(cfg.lasso, 4 * cfg.D, cfg.D).ok &&
                            check_mad(cfg.lasso, cfg.D, cfg.D, cfg.D).ok;
    if (!*res.containment_holds) why.push_back("containment");
  }
  for (const auto& w : why) {
    res.failure += (res.failure.empty() ? "" : ", ") + w;
  }
  return res;
}

FuzzSummary fuzz_campaign(const FuzzParams& p) {
  p.validate();
  FuzzSummary sum;
  sum.params = p;
  sum.trials = p.trials;
  sum.results.resize(static_cast<std::size_t>(p.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < p.trials; i = next++) {
      sum.results[static_cast<std::size_t>(i)] =
          run_trial(p, trial_seed(p.seed, i), i);
    }
  };
  const int jobs = std::min(p.jobs, p.trials);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const TrialResult& r : sum.results) {
    if (r.passed()) ++sum.passed;
    if (r.bounded_matches == false) {
      ++sum.bounded_mismatches;
      if (!sum.first_bounded_mismatch) sum.first_bounded_mismatch = r.trial_seed;
    }
    if (r.containment_holds == false) ++sum.containment_failures;
    if (r.report.failure) ++sum.invariant_failures;
    if (!r.passed() && !sum.first_failure) sum.first_failure = r;
  }
  return sum;
}

}  // namespace msgadv
