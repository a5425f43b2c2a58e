// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "msgadv/causal.hpp"
#include "msgadv/fuzz.hpp"
#include "msgadv/generators.hpp"
#include "msgadv/scenarios.hpp"

using namespace msgadv;

namespace {

std::vector<CommGraph> random_graphs(int n, int count) {
  Rng rng(17);
  std::vector<CommGraph> gs;
  for (int i = 0; i < count; ++i) {
    CommGraph g(n);
    for (ProcessId a = 1; a <= n; ++a) {
      for (ProcessId b = 1; b <= n; ++b) {
        if (a != b && rng.chance(1, n)) g.add_edge(a, b);
      }
    }
    gs.push_back(std::move(g));
  }
  return gs;
}

LassoSequence estable_lasso(int n, int D) {
  AdversaryParams p;
  p.n = n;
  p.D = D;
  p.rsr_target = 8;
  p.rgst_target = 5;
  p.seed = 3;
  return generate_estable(p).lasso;
}

void BM_RootComponents(benchmark::State& state) {
  const auto gs = random_graphs(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(root_components(gs[i++ % gs.size()]));
  }
}
BENCHMARK(BM_RootComponents)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_CausalPast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LassoSequence l = estable_lasso(n, std::min(3, n - 1));
  const RoundWindow w(l, 1, 40);
  for (auto _ : state) {
    for (ProcessId p = 1; p <= n; ++p) benchmark::DoNotOptimize(causal_past(w, p, 0, 40));
  }
}
BENCHMARK(BM_CausalPast)->Arg(4)->Arg(8);

void BM_CheckEStable(benchmark::State& state) {
  const LassoSequence l = estable_lasso(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_estable(l, 2));
}
BENCHMARK(BM_CheckEStable)->Arg(4)->Arg(8);

void BM_RunExecution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RunConfig cfg;
  cfg.n = n;
  cfg.D = 2;
  cfg.lasso = estable_lasso(n, 2);
  cfg.inputs.assign(static_cast<std::size_t>(n), 1);
  cfg.certificate = check_estable(cfg.lasso, 2).certificate;
  cfg.mode = state.range(1) != 0 ? HistoryMode::bounded(5) : HistoryMode::full();
  for (auto _ : state) benchmark::DoNotOptimize(run_execution(cfg));
}
BENCHMARK(BM_RunExecution)->Args({4, 0})->Args({8, 0})->Args({8, 1});

void BM_FuzzTrial(benchmark::State& state) {
  FuzzParams p;
  p.adversary = state.range(0) != 0 ? AdversaryKind::kAltEStable : AdversaryKind::kEStable;
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trial(p, trial_seed(1, i), i));
    ++i;
  }
}
BENCHMARK(BM_FuzzTrial)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
