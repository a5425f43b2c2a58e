// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/lasso.hpp"

#include <algorithm>

namespace msgadv {

LassoSequence::LassoSequence(std::vector<CommGraph> prefix,
                             std::vector<CommGraph> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw InvalidArgument("lasso cycle must be non-empty");
  n_ = cycle_.front().n();
  roots_.reserve(prefix_.size() + cycle_.size());
  for (const auto* part : {&prefix_, &cycle_}) {
    for (const CommGraph& g : *part) {
      if (g.n() != n_) {
        throw InvalidArgument("lasso graphs disagree on n (" +
                              std::to_string(g.n()) + " vs " +
                              std::to_string(n_) + ")");
      }
      if (auto v = validate_graph(g); !v.empty()) {
        throw InvalidArgument("invalid graph in lasso: " + v.front().describe());
      }
      roots_.push_back(root_components(g));
    }
  }
}

std::size_t LassoSequence::index_of(Round r) const {
  if (r < 1) throw InvalidArgument("round " + std::to_string(r) + " < 1");
  if (r <= prefix_length()) return static_cast<std::size_t>(r - 1);
  return prefix_.size() +
         static_cast<std::size_t>((r - prefix_length() - 1) % cycle_length());
}

const CommGraph& LassoSequence::graph(Round r) const {
  const std::size_t i = index_of(r);
  return i < prefix_.size() ? prefix_[i] : cycle_[i - prefix_.size()];
}

const std::vector<ProcessSet>& LassoSequence::roots(Round r) const {
  return roots_[index_of(r)];
}

ProcessSet LassoSequence::single_root(Round r) const {
  const auto& rs = roots(r);
  return rs.size() == 1 ? rs.front() : ProcessSet{};
}

Round LassoSequence::default_horizon() const {
  return prefix_length() + 2 * cycle_length() + 2 * n_;
}

bool LassoSequence::root_in_whole_cycle(ProcessSet s) const {
  for (std::size_t i = prefix_.size(); i < roots_.size(); ++i) {
    if (std::find(roots_[i].begin(), roots_[i].end(), s) == roots_[i].end()) {
      return false;
    }
  }
  return true;
}

RoundWindow::RoundWindow(const LassoSequence& lasso, Round a, Round b)
    : lasso_(&lasso), a_(a), b_(b) {
  if (a < 1 || a > b) {
    throw InvalidArgument("invalid window [" + std::to_string(a) + "," +
                          std::to_string(b) + "]");
  }
}

const CommGraph& RoundWindow::graph(Round r) const {
  if (!contains(r)) {
    throw InvalidArgument("round " + std::to_string(r) + " outside window");
  }
  return lasso_->graph(r);
}

const std::vector<ProcessSet>& RoundWindow::roots(Round r) const {
  if (!contains(r)) {
    throw InvalidArgument("round " + std::to_string(r) + " outside window");
  }
  return lasso_->roots(r);
}

}  // namespace msgadv
