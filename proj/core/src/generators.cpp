// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace msgadv {

namespace {

constexpr int kDensityPct = 25;
constexpr int kRoundTries = 64;
constexpr int kSafeFromAttempt = 16;

std::vector<ProcessId> shuffled(Rng& rng, ProcessSet pool) {
  auto v = pool.members();
  rng.shuffle(v);
  return v;
}

// k pairwise disjoint non-empty subsets of `pool` (k <= |pool|).
std::vector<ProcessSet> sample_root_sets(Rng& rng, ProcessSet pool, int k) {
  const auto order = shuffled(rng, pool);
  const int used = rng.range(k, static_cast<int>(order.size()));
  // k-1 distinct cut points in 1..used-1
  std::vector<int> cuts;
  for (int i = 1; i < used; ++i) cuts.push_back(i);
  rng.shuffle(cuts);
  cuts.resize(static_cast<std::size_t>(k - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(used);
  std::vector<ProcessSet> sets;
  int from = 0;
  for (int cut : cuts) {
    ProcessSet s;
    for (int i = from; i < cut; ++i) s.insert(order[static_cast<std::size_t>(i)]);
    sets.push_back(s);
    from = cut;
  }
  return sets;
}

bool has_root(const std::vector<ProcessSet>& roots, ProcessSet s) {
  return std::find(roots.begin(), roots.end(), s) != roots.end();
}

// Accumulates rounds while tracking, for every set, how many consecutive
// rounds up to now it has been a root.
class Builder {
 public:
  Builder(Rng& rng, int n, int D, int limit, bool safe)
      : rng_(rng), n_(n), D_(D), limit_(limit), safe_(safe) {}

  Round next_round() const { return static_cast<Round>(graphs_.size()) + 1; }
  std::vector<CommGraph> take() { return std::move(graphs_); }

  // Root sets other than `exempt` would stay within the run limit.
  bool within_limit(const std::vector<ProcessSet>& roots,
                    ProcessSet exempt) const {
    for (ProcessSet s : roots) {
      if (s == exempt) continue;
      auto it = runs_.find(s.mask());
      const int prev = it == runs_.end() ? 0 : it->second;
      if (prev + 1 > limit_) return false;
    }
    return true;
  }

  void push(CommGraph g) {
    std::map<std::uint64_t, int> next;
    for (ProcessSet s : root_components(g)) {
      auto it = runs_.find(s.mask());
      next[s.mask()] = (it == runs_.end() ? 0 : it->second) + 1;
    }
    runs_ = std::move(next);
    graphs_.push_back(std::move(g));
  }

  CommGraph single(ProcessSet root, bool force_safe = false) {
    if (safe_ || force_safe) return safe_single_rooted_graph(rng_, n_, root, D_);
    return planted_graph(rng_, n_, {root}, kDensityPct);
  }

  // Unconstrained-but-for-limits round. `forbid` may not be a root.
  // `multi` requires at least two roots (n >= 2).
  bool chaos(ProcessSet forbid, bool limited, bool multi = false) {
    const ProcessSet everyone = ProcessSet::all(n_);
    for (int t = 0; t < kRoundTries; ++t) {
      const int kmax = std::min(n_, 4);
      int k = kmax == 1 ? 1
              : (!multi && rng_.chance(1, 5)) ? 1
                                               : rng_.range(2, kmax);
      if (multi && k < 2) return false;
      auto sets = sample_root_sets(rng_, everyone, k);
      if (has_root(sets, forbid) && !forbid.empty()) continue;
      if (limited && !within_limit(sets, {})) continue;
      push(k == 1 ? single(sets.front(), true)
                  : planted_graph(rng_, n_, sets, kDensityPct));
      return true;
    }
    return false;
  }

  // `root` plus at least one other root drawn from the complement.
  bool contested(ProcessSet root) {
    const ProcessSet rest = ProcessSet::all(n_) - root;
    if (rest.empty()) return false;
    for (int t = 0; t < kRoundTries; ++t) {
      auto sets = sample_root_sets(rng_, rest, rng_.range(1, std::min(3, rest.size())));
      if (!within_limit(sets, {})) continue;
      sets.push_back(root);
      push(planted_graph(rng_, n_, sets, kDensityPct));
      return true;
    }
    return false;
  }

 private:
  Rng& rng_;
  int n_;
  int D_;
  int limit_;
  bool safe_;
  std::map<std::uint64_t, int> runs_;
  std::vector<CommGraph> graphs_;
};

ProcessSet random_root(Rng& rng, int n, int max_size) {
  const auto order = shuffled(rng, ProcessSet::all(n));
  const int size = rng.range(1, std::max(1, max_size));
  ProcessSet s;
  for (int i = 0; i < size; ++i) s.insert(order[static_cast<std::size_t>(i)]);
  return s;
}

void check_common(const AdversaryParams& p, Round rgst) {
  if (p.n < 2 || p.n > kMaxProcesses) {
    throw InfeasibleParams("n must satisfy 2 <= n <= " +
                           std::to_string(kMaxProcesses));
  }
  if (p.D < 1 || p.D > p.n - 1) {
    throw InfeasibleParams("D must satisfy 1 <= D <= n-1 (D=" +
                           std::to_string(p.D) + ", n=" + std::to_string(p.n) +
                           ")");
  }
  if (p.rsr_target < 1) throw InfeasibleParams("rSR must be >= 1");
  if (rgst < 1 || rgst > p.rsr_target) {
    throw InfeasibleParams("rGST must satisfy 1 <= rGST <= rSR");
  }
}

// Largest root size that leaves enough processes outside the root for
// `contested` rounds of the given length.
int max_root_size(int n, Round contested_rounds, int limit) {
  if (contested_rounds == 0) return n;
  if (contested_rounds <= limit) return n - 1;
  return n - 2;
}

std::vector<CommGraph> distinct_cycle(Builder& b, ProcessSet root, int len) {
  std::vector<CommGraph> cycle;
  for (int t = 0; t < 4 * len && std::ssize(cycle) < len; ++t) {
    CommGraph g = b.single(root);
    if (std::find(cycle.begin(), cycle.end(), g) == cycle.end()) {
      cycle.push_back(std::move(g));
    }
  }
  return cycle;
}

}  // namespace

CommGraph planted_graph(Rng& rng, int n, const std::vector<ProcessSet>& roots,
                        int density_pct) {
  CommGraph g(n);
  ProcessSet in_roots;
  for (ProcessSet s : roots) {
    if (s.empty() || !(in_roots & s).empty()) {
      throw InvalidArgument("planted roots must be non-empty and disjoint");
    }
    in_roots |= s;
    auto members = shuffled(rng, s);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      g.add_edge(members[i], members[i + 1]);
    }
    if (members.size() > 1) g.add_edge(members.back(), members.front());
    for (ProcessId a : members) {
      for (ProcessId c : members) {
        if (a != c && rng.chance(density_pct, 100)) g.add_edge(a, c);
      }
    }
  }
  const ProcessSet everyone = ProcessSet::all(n);
  if (!in_roots.subset_of(everyone)) throw InvalidArgument("root outside 1..n");
  std::vector<ProcessId> attached = in_roots.members();
  for (ProcessId v : shuffled(rng, everyone - in_roots)) {
    g.add_edge(rng.pick(attached), v);
    attached.push_back(v);
  }
  for (ProcessId v : (everyone - in_roots).members()) {
    for (ProcessId u = 1; u <= n; ++u) {
      if (u != v && rng.chance(density_pct, 100)) g.add_edge(u, v);
    }
  }
  return g;
}

CommGraph safe_single_rooted_graph(Rng& rng, int n, ProcessSet root, int D) {
  CommGraph g(n);
  const auto members = root.members();
  for (ProcessId a : members) {
    for (ProcessId c : members) g.add_edge(a, c);
  }
  const ProcessSet rest = ProcessSet::all(n) - root;
  for (ProcessId v : rest.members()) {
    if (D == 1) {
      for (ProcessId a : members) g.add_edge(a, v);
    } else {
      g.add_edge(rng.pick(members), v);
    }
    for (ProcessId u = 1; u <= n; ++u) {
      if (u != v && rng.chance(kDensityPct, 100)) g.add_edge(u, v);
    }
  }
  return g;
}

GeneratedLasso generate_estable(const AdversaryParams& p) {
  const Round S = p.rsr_target;
  const Round G = p.rgst_target == 0 ? S : p.rgst_target;
  check_common(p, G);
  if (p.n == 2 && S - G > p.D) {
    throw InfeasibleParams(
        "n=2 leaves a single process outside the root, so rSR-rGST must be "
        "<= D");
  }
  for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
    Rng rng(derive_seed(p.seed, static_cast<std::uint64_t>(attempt)));
    Builder b(rng, p.n, p.D, p.D, attempt >= kSafeFromAttempt);
    const ProcessSet root = random_root(rng, p.n, max_root_size(p.n, S - G, p.D));
    bool ok = true;
    for (Round r = 1; r < G && ok; ++r) {
      ok = b.chaos(r == G - 1 ? root : ProcessSet{}, true);
    }
    for (Round r = G; r < S && ok; ++r) ok = b.contested(root);
    if (!ok) continue;
    auto cycle = distinct_cycle(b, root, rng.range(2, 4));
    LassoSequence l(b.take(), std::move(cycle));
    const auto res = check_estable(l, p.D);
    if (!res.ok || res.certificate->rgst != G || res.certificate->rsr != S) {
      continue;
    }
    return {std::move(l), *res.certificate, *res.certificate, attempt + 1};
  }
  throw GenerationFailed("estable generator exhausted " +
                         std::to_string(kGeneratorRetries) + " retries");
}

namespace {

GeneratedLasso generate_alt(const AdversaryParams& p, int x, int y,
                            AdversaryKind kind) {
  if (x < 1) throw InfeasibleParams("x must be >= 1");
  if (y < 0) throw InfeasibleParams("y must be >= 0");
  Round S = p.rsr_target;
  Round G = p.rgst_target == 0 ? S : p.rgst_target;
  check_common(p, G);
  if (p.n == 2 && S - G > x) {
    throw InfeasibleParams(
        "n=2 leaves a single process outside the root, so rSR-rGST must be "
        "<= x");
  }
  const int single_len = std::max(x, y) + 1;
  for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
    Rng rng(derive_seed(p.seed, static_cast<std::uint64_t>(attempt)));
    Builder b(rng, p.n, p.D, x, attempt >= kSafeFromAttempt);
    const ProcessSet root = random_root(rng, p.n, max_root_size(p.n, S - G, x));
    Round g = G;
    Round s = S;
    bool ok = true;
    ProcessSet spurious;
    if (p.spurious_root) {
      do {
        spurious = random_root(rng, p.n, p.n - 1);
      } while (spurious == root);
      const int before = rng.range(0, 2);
      const int lead = p.n - spurious.size() >= 1 ? rng.range(0, 1) : 0;
      const Round needed = before + lead + (x + 1) + 2;
      if (g < needed) {
        s += needed - g;
        g = needed;
      }
      for (int i = 0; i < before && ok; ++i) ok = b.chaos({}, true);
      for (int i = 0; i < lead && ok; ++i) ok = b.contested(spurious);
      for (int i = 0; i <= x && ok; ++i) b.push(b.single(spurious));
      ok = ok && b.chaos(spurious, true);
    }
    while (b.next_round() < g && ok) {
      ok = b.chaos(b.next_round() == g - 1 ? root : ProcessSet{}, true);
    }
    while (b.next_round() < s && ok) ok = b.contested(root);
    for (int i = 0; i < single_len && ok; ++i) b.push(b.single(root));
    AdversaryCertificate planted;
    planted.kind = kind;
    planted.rgst = g;
    planted.rsr = s;
    planted.root = root;
    planted.D = p.D;
    planted.x = x;
    planted.y = y;
    for (int i = 0; i < p.D && ok; ++i) {
      const int gap = p.consecutive_reappearances ? 0 : rng.range(0, 3);
      for (int j = 0; j < gap && ok; ++j) {
        ok = b.chaos({}, false, true);
      }
      planted.reappearances.push_back(b.next_round());
      b.push(b.single(root));
    }
    if (!ok) continue;
    const int clen = rng.range(1, 3);
    Builder tail(rng, p.n, p.D, std::numeric_limits<int>::max(), true);
    for (int i = 0; i < clen; ++i) {
      if (rng.chance(1, 2) && tail.chaos({}, false, true)) continue;
      tail.push(tail.single(random_root(rng, p.n, p.n), true));
    }
    LassoSequence l(b.take(), tail.take());
    auto res = kind == AdversaryKind::kMad ? check_mad(l, x, y, p.D)
                                           : check_alt_estable(l, p.D);
    if (!res.ok || res.certificate->rgst > g) continue;
    return {std::move(l), *res.certificate, planted, attempt + 1};
  }
  throw GenerationFailed(std::string(kind_name(kind)) +
                         " generator exhausted " +
                         std::to_string(kGeneratorRetries) + " retries");
}

}  // namespace

GeneratedLasso generate_alt_estable(const AdversaryParams& p) {
  return generate_alt(p, p.D, p.D, AdversaryKind::kAltEStable);
}

GeneratedLasso generate_mad(const AdversaryParams& p) {
  return generate_alt(p, p.x, p.y, AdversaryKind::kMad);
}

}  // namespace msgadv
