// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "msgadv/graph.hpp"

namespace msgadv {

// Infinite graph sequence G^1, G^2, ... encoded as a finite prefix followed
// by a cycle repeated forever. Root components of every stored graph are
// computed once at construction.
class LassoSequence {
 public:
  LassoSequence() = default;
  LassoSequence(std::vector<CommGraph> prefix, std::vector<CommGraph> cycle);

  int n() const { return n_; }
  const std::vector<CommGraph>& prefix() const { return prefix_; }
  const std::vector<CommGraph>& cycle() const { return cycle_; }
  Round prefix_length() const { return static_cast<Round>(prefix_.size()); }
  Round cycle_length() const { return static_cast<Round>(cycle_.size()); }

  // Rounds start at 1.
  const CommGraph& graph(Round r) const;
  const std::vector<ProcessSet>& roots(Round r) const;

  // Single root of G^r, or the empty set if G^r has several roots.
  ProcessSet single_root(Round r) const;

  // |prefix| + 2|cycle| + 2n.
  Round default_horizon() const;

  // Every graph of the cycle has `s` among its roots.
  bool root_in_whole_cycle(ProcessSet s) const;

  friend bool operator==(const LassoSequence& a, const LassoSequence& b) {
    return a.prefix_ == b.prefix_ && a.cycle_ == b.cycle_;
  }

 private:
  std::size_t index_of(Round r) const;

  int n_ = 0;
  std::vector<CommGraph> prefix_;
  std::vector<CommGraph> cycle_;
  std::vector<std::vector<ProcessSet>> roots_;  // prefix then cycle
};

// Rounds [a, b] of a lasso. Holds a reference; the lasso must outlive it.
class RoundWindow {
 public:
  RoundWindow(const LassoSequence& lasso, Round a, Round b);

  const LassoSequence& lasso() const { return *lasso_; }
  Round a() const { return a_; }
  Round b() const { return b_; }
  bool contains(Round r) const { return r >= a_ && r <= b_; }
  const CommGraph& graph(Round r) const;
  const std::vector<ProcessSet>& roots(Round r) const;

 private:
  const LassoSequence* lasso_;
  Round a_;
  Round b_;
};

}  // namespace msgadv
