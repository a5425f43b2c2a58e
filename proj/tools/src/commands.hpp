// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msgadv/consensus.hpp"

namespace msgadv::cli {

struct GenerateOptions {
  std::string adversary = "estable";
  int n = 0;
  int D = 1;
  int x = 0;
  int y = 0;
  Round rgst = 0;
  Round rsr = 1;
  std::uint64_t seed = 0;
  bool spurious = false;
  bool consecutive = false;
  std::string out;
  std::string cert_out;
};

struct CheckOptions {
  std::string lasso = "-";
  std::string adversary = "estable";
  int D = 0;
  int x = 0;
  int y = 0;
  int window = 0;
  Round horizon = 0;
};

struct RunOptions {
  std::string lasso = "-";
  std::vector<Value> inputs;
  int D = 1;
  std::string mode = "full";
  Round horizon = 0;
  std::uint64_t seed = 0;
  std::string trace_out;
  std::string dot_out;
  bool record_states = false;
  std::string mutation;
};

struct ScenarioOptions {
  std::string name;
  int n = 5;
  int D = 0;  // 0: scenario default
  Round tau = 4;
  Round prefix = 0;
  int k = 3;
  std::string out_dir;
};

struct FuzzOptions {
  std::string adversary = "estable";
  int trials = 100;
  std::pair<int, int> n_range{2, 8};
  std::pair<int, int> d_range{1, 3};
  Round rsr_max = 12;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool no_extra_checks = false;
  std::string report_out;
  std::optional<std::uint64_t> replay_seed;
  std::string trace_out;
  std::string mutation;
};

int cmd_generate(const GenerateOptions& o);
int cmd_check(const CheckOptions& o);
int cmd_run(const RunOptions& o);
int cmd_scenario(const ScenarioOptions& o);
int cmd_fuzz(const FuzzOptions& o);

// Shared by run and fuzz.
CoreStepOptions parse_mutation(const std::string& m);

}  // namespace msgadv::cli
