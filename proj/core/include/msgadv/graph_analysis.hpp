// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "msgadv/lasso.hpp"

namespace msgadv {

// A maximal run [a, b] (relative to the window) on which `root` is a root
// component of every graph. A clipped side touches the window boundary, so
// the run may continue in the unrolled sequence.
struct RootInterval {
  ProcessSet root;
  Round a = 0;
  Round b = 0;
  bool clipped_left = false;
  bool clipped_right = false;

  Round length() const { return b - a + 1; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

// Sorted by start round, then LexLess on the root.
std::vector<RootInterval> common_root_intervals(const RoundWindow& w);

std::optional<ProcessSet> single_root(const RoundWindow& w);

// Common root over [alpha, end] that is the single root on
// [alpha_single, alpha_single + x].
struct EcsRoot {
  ProcessSet root;
  Round alpha = 0;
  Round end = 0;
  Round alpha_single = 0;
  bool clipped_right = false;
};

// Earliest match by alpha, then alpha_single.
std::optional<EcsRoot> find_ecs_common_root(const RoundWindow& w, int x);

// Earliest start of x+1 consecutive rounds inside `iv` on which iv.root is
// the single root, if any.
std::optional<Round> first_single_run(const LassoSequence& l,
                                      const RootInterval& iv, int x);

}  // namespace msgadv
