// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "msgadv/lasso.hpp"

namespace msgadv {

// Root members are drawn as double circles; self-loops are explicit.
std::string to_dot(const CommGraph& g, const std::string& name);

// One digraph per round 1..horizon (horizon 0: default_horizon).
std::string lasso_to_dot(const LassoSequence& l, Round horizon = 0);

std::string approx_to_dot(const PartialGraph& g, ProcessId owner,
                          const std::string& name);

}  // namespace msgadv
