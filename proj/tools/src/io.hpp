// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "msgadv/serialization.hpp"

namespace msgadv::cli {

enum ExitCode : int {
  kPass = 0,
  kNotSatisfied = 1,
  kInputError = 2,
  kInvariantViolation = 3,
};

// "-" reads stdin.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

json parse_json(const std::string& text, const std::string& source);

// Accepts a bare lasso or any document carrying one under "lasso".
LassoSequence load_lasso(const std::string& path);

void print_json(const json& j);

}  // namespace msgadv::cli
