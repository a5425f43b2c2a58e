// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/graph_analysis.hpp"

#include <algorithm>
#include <map>

namespace msgadv {

std::vector<RootInterval> common_root_intervals(const RoundWindow& w) {
  std::vector<RootInterval> out;
  std::map<std::uint64_t, Round> open;  // root mask -> start
  auto close = [&](std::uint64_t mask, Round start, Round end, bool right) {
    out.push_back({ProcessSet::from_mask(mask), start, end,
                   start == w.a() && w.a() > 1, right});
  };
  for (Round r = w.a(); r <= w.b(); ++r) {
    const auto& roots = w.roots(r);
    for (auto it = open.begin(); it != open.end();) {
      const bool still = std::any_of(roots.begin(), roots.end(), [&](auto s) {
        return s.mask() == it->first;
      });
      if (still) {
        ++it;
      } else {
        close(it->first, it->second, r - 1, false);
        it = open.erase(it);
      }
    }
    for (ProcessSet s : roots) open.emplace(s.mask(), r);
  }
  for (const auto& [mask, start] : open) close(mask, start, w.b(), true);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.a != y.a) return x.a < y.a;
    return lex_less(x.root, y.root);
  });
  return out;
}

std::optional<ProcessSet> single_root(const RoundWindow& w) {
  const auto& first = w.roots(w.a());
  if (first.size() != 1) return std::nullopt;
  for (Round r = w.a() + 1; r <= w.b(); ++r) {
    const auto& rs = w.roots(r);
    if (rs.size() != 1 || rs.front() != first.front()) return std::nullopt;
  }
  return first.front();
}

std::optional<Round> first_single_run(const LassoSequence& l,
                                      const RootInterval& iv, int x) {
  Round run = 0;
  for (Round r = iv.a; r <= iv.b; ++r) {
    run = l.single_root(r) == iv.root ? run + 1 : 0;
    if (run == x + 1) return r - x;
  }
  return std::nullopt;
}

std::optional<EcsRoot> find_ecs_common_root(const RoundWindow& w, int x) {
  if (x < 0) throw InvalidArgument("x must be >= 0");
  for (const RootInterval& iv : common_root_intervals(w)) {
    if (auto s = first_single_run(w.lasso(), iv, x)) {
      return EcsRoot{iv.root, iv.a, iv.b, *s, iv.clipped_right};
    }
  }
  return std::nullopt;
}

}  // namespace msgadv
