// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/adversary.hpp"

#include <algorithm>
#include <array>

#include "msgadv/causal.hpp"
#include "msgadv/graph_analysis.hpp"

namespace msgadv {

namespace {

constexpr std::array<std::pair<AdversaryKind, std::string_view>, 8> kNames{{
    {AdversaryKind::kLiveness, "liveness"},
    {AdversaryKind::kSafety, "safety"},
    {AdversaryKind::kEStable, "estable"},
    {AdversaryKind::kAltLiveness, "altliveness"},
    {AdversaryKind::kAltSafety, "altsafety"},
    {AdversaryKind::kAltEStable, "altestable"},
    {AdversaryKind::kMad, "mad"},
    {AdversaryKind::kVsrc, "vsrc"},
}};

CheckResult fail(AdversaryKind k, AdversaryWitness w) {
  return {k, false, std::nullopt, std::move(w)};
}

CheckResult pass(AdversaryKind k, std::optional<AdversaryCertificate> c) {
  return {k, true, std::move(c), std::nullopt};
}

// The run continues forever: it reaches the cycle and the root belongs to
// every cycle graph.
bool runs_forever(const LassoSequence& l, const RootInterval& iv) {
  return iv.clipped_right && iv.b > l.prefix_length() &&
         l.root_in_whole_cycle(iv.root);
}

bool longer_than(const LassoSequence& l, const RootInterval& iv, int x) {
  return runs_forever(l, iv) || iv.length() > x;
}

CheckResult relabel(CheckResult r, AdversaryKind k, std::string_view part) {
  r.kind = k;
  if (r.witness) r.witness->reason = std::string(part) + ": " + r.witness->reason;
  return r;
}

std::optional<AdversaryWitness> diameter_witness(const LassoSequence& l,
                                                 int D, Round horizon) {
  auto w = check_dynamic_diameter(l, D, horizon);
  if (!w) return std::nullopt;
  AdversaryWitness out;
  out.reason = "diameter: " + w->missing.to_string() +
               " missing from causal past of p" + std::to_string(w->p);
  out.root = w->root;
  out.rounds = w->rounds;
  out.a = w->rounds.front();
  out.b = w->rounds.back();
  out.p = w->p;
  return out;
}

}  // namespace

std::string_view kind_name(AdversaryKind k) {
  for (const auto& [kind, name] : kNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

std::optional<AdversaryKind> parse_kind(std::string_view s) {
  for (const auto& [kind, name] : kNames) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

Round AdversaryCertificate::deadline() const {
  if (!reappearances.empty()) return reappearances.back();
  return rsr + 2 * D;
}

void check_diameter_param(int n, int D) {
  if (D < 1 || D > n - 1) {
    throw InvalidArgument("D must satisfy 1 <= D <= n-1 (D=" +
                          std::to_string(D) + ", n=" + std::to_string(n) + ")");
  }
}

Round alt_horizon(const LassoSequence& l, int D, int x) {
  return std::max(diameter_horizon(l, D),
                  l.prefix_length() + (D + 3) * l.cycle_length() + 2 * l.n() +
                      x + 1);
}

CheckResult check_liveness(const LassoSequence& l) {
  const auto kind = AdversaryKind::kLiveness;
  // A root that is single forever must be the single root of every cycle
  // graph.
  const Round p = l.prefix_length();
  const ProcessSet root = l.single_root(p + 1);
  bool single_in_cycle = !root.empty();
  for (Round r = p + 1; r <= p + l.cycle_length() && single_in_cycle; ++r) {
    single_in_cycle = l.single_root(r) == root;
  }
  if (!single_in_cycle) {
    return fail(kind, {"no root is eventually single forever", {}, 0, 0, {}, 0});
  }
  Round rgst = p + 1;
  while (rgst > 1) {
    const auto& rs = l.roots(rgst - 1);
    if (std::find(rs.begin(), rs.end(), root) == rs.end()) break;
    --rgst;
  }
  Round rsr = p + 1;
  while (rsr > 1 && l.single_root(rsr - 1) == root) --rsr;
  AdversaryCertificate c;
  c.kind = kind;
  c.rgst = rgst;
  c.rsr = rsr;
  c.root = root;
  return pass(kind, c);
}

CheckResult check_safety(const LassoSequence& l, int x, Round horizon) {
  const auto kind = AdversaryKind::kSafety;
  if (x < 1) throw InvalidArgument("safety requires x >= 1");
  if (horizon <= 0) horizon = l.default_horizon();
  const auto live = check_liveness(l);
  const std::optional<ProcessSet> faes =
      live.ok ? std::optional(live.certificate->root) : std::nullopt;
  for (const RootInterval& iv : common_root_intervals(RoundWindow(l, 1, horizon))) {
    if (!longer_than(l, iv, x) || (faes && iv.root == *faes)) continue;
    AdversaryWitness w;
    w.reason = "root " + iv.root.to_string() + " common for more than " +
               std::to_string(x) + " rounds" +
               (faes ? " but not the eventually-forever-single root"
                     : " and no root is eventually single forever");
    w.root = iv.root;
    w.a = iv.a;
    w.b = iv.b;
    return fail(kind, w);
  }
  return pass(kind, live.certificate);
}

CheckResult check_estable(const LassoSequence& l, int D) {
  const auto kind = AdversaryKind::kEStable;
  check_diameter_param(l.n(), D);
  auto live = check_liveness(l);
  if (!live.ok) return relabel(std::move(live), kind, "liveness");
  auto safe = check_safety(l, D);
  if (!safe.ok) return relabel(std::move(safe), kind, "safety");
  if (auto w = diameter_witness(l, D, 0)) return fail(kind, *w);
  AdversaryCertificate c = *live.certificate;
  c.kind = kind;
  c.D = D;
  c.x = D;
  return pass(kind, c);
}

CheckResult check_alt_liveness(const LassoSequence& l, int D, int x,
                               Round horizon) {
  const auto kind = AdversaryKind::kAltLiveness;
  if (x < 0) throw InvalidArgument("x must be >= 0");
  if (D < 1) throw InvalidArgument("D must be >= 1");
  if (horizon <= 0) horizon = alt_horizon(l, D, x);
  for (const RootInterval& iv : common_root_intervals(RoundWindow(l, 1, horizon))) {
    const auto single = first_single_run(l, iv, x);
    if (!single) continue;
    std::vector<Round> re;
    for (Round r = *single + x + 1; r <= horizon && std::ssize(re) < D; ++r) {
      if (l.single_root(r) == iv.root) re.push_back(r);
    }
    if (std::ssize(re) < D) continue;
    AdversaryCertificate c;
    c.kind = kind;
    c.rgst = iv.a;
    c.rsr = *single;
    c.root = iv.root;
    c.reappearances = std::move(re);
    c.D = D;
    c.y = x;
    return pass(kind, c);
  }
  return fail(kind, {"no ECS(" + std::to_string(x + 1) +
                         ")-common root followed by " + std::to_string(D) +
                         " single-rooted re-appearances",
                     {}, 0, 0, {}, 0});
}

CheckResult check_alt_safety(const LassoSequence& l, int x, Round horizon) {
  const auto kind = AdversaryKind::kAltSafety;
  if (x < 1) throw InvalidArgument("safety requires x >= 1");
  if (horizon <= 0) horizon = alt_horizon(l, 1, x);
  std::optional<Round> earliest;
  for (const RootInterval& iv : common_root_intervals(RoundWindow(l, 1, horizon))) {
    if (!longer_than(l, iv, x)) continue;
    if (earliest && iv.a > *earliest) break;
    earliest = iv.a;
    if (!first_single_run(l, iv, x)) {
      AdversaryWitness w;
      w.reason = "earliest root " + iv.root.to_string() + " common for >= " +
                 std::to_string(x + 1) + " rounds is never single for " +
                 std::to_string(x + 1) + " consecutive rounds";
      w.root = iv.root;
      w.a = iv.a;
      w.b = iv.b;
      return fail(kind, w);
    }
  }
  return pass(kind, std::nullopt);
}

CheckResult check_mad(const LassoSequence& l, int x, int y, int D,
                      Round horizon) {
  const auto kind = AdversaryKind::kMad;
  check_diameter_param(l.n(), D);
  if (horizon <= 0) horizon = alt_horizon(l, D, std::max(x, y));
  auto safe = check_alt_safety(l, x, horizon);
  if (!safe.ok) return relabel(std::move(safe), kind, "altsafety");
  auto live = check_alt_liveness(l, D, y, horizon);
  if (!live.ok) return relabel(std::move(live), kind, "altliveness");
  if (auto w = diameter_witness(l, D, 0)) return fail(kind, *w);
  AdversaryCertificate c = *live.certificate;
  c.kind = kind;
  c.x = x;
  c.y = y;
  return pass(kind, c);
}

CheckResult check_alt_estable(const LassoSequence& l, int D, Round horizon) {
  auto r = check_mad(l, D, D, D, horizon);
  r.kind = AdversaryKind::kAltEStable;
  if (r.certificate) r.certificate->kind = AdversaryKind::kAltEStable;
  return r;
}

CheckResult check_vsrc(const LassoSequence& l, int window, int D) {
  const auto kind = AdversaryKind::kVsrc;
  if (window < 1) throw InvalidArgument("window must be >= 1");
  check_diameter_param(l.n(), D);
  std::optional<Round> found;
  const Round last_start = l.prefix_length() + l.cycle_length();
  for (Round s = 1; s <= last_start && !found; ++s) {
    bool same = true;
    for (Round r = s + 1; r < s + window && same; ++r) {
      same = l.roots(r) == l.roots(s);
    }
    if (same) found = s;
  }
  if (!found) {
    return fail(kind, {"no " + std::to_string(window) +
                           " consecutive rounds with identical root components",
                       {}, 0, 0, {}, 0});
  }
  if (auto w = diameter_witness(l, D, 0)) return fail(kind, *w);
  AdversaryCertificate c;
  c.kind = kind;
  c.rgst = *found;
  c.rsr = *found;
  c.root = l.roots(*found).front();
  c.D = D;
  c.x = window;
  return pass(kind, c);
}

}  // namespace msgadv
