// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msgadv/lasso.hpp"

namespace msgadv {

enum class AdversaryKind {
  kLiveness,
  kSafety,
  kEStable,
  kAltLiveness,
  kAltSafety,
  kAltEStable,
  kMad,
  kVsrc,
};

// "liveness", "safety", "estable", "altliveness", "altsafety",
// "altestable", "mad", "vsrc".
std::string_view kind_name(AdversaryKind k);
std::optional<AdversaryKind> parse_kind(std::string_view s);

struct AdversaryCertificate {
  AdversaryKind kind = AdversaryKind::kEStable;
  Round rgst = 0;
  Round rsr = 0;
  ProcessSet root;
  std::vector<Round> reappearances;  // r_1 < ... < r_D, if any
  int D = 0;
  int x = 0;
  int y = 0;

  // r_D when re-appearances are present, otherwise rSR + 2D.
  Round deadline() const;

  friend bool operator==(const AdversaryCertificate&,
                         const AdversaryCertificate&) = default;
};

struct AdversaryWitness {
  std::string reason;
  ProcessSet root;
  Round a = 0;
  Round b = 0;
  std::vector<Round> rounds;
  ProcessId p = 0;

  friend bool operator==(const AdversaryWitness&,
                         const AdversaryWitness&) = default;
};

struct CheckResult {
  AdversaryKind kind = AdversaryKind::kEStable;
  bool ok = false;
  std::optional<AdversaryCertificate> certificate;
  std::optional<AdversaryWitness> witness;

  explicit operator bool() const { return ok; }
};

// Throws InvalidArgument naming the constraint.
void check_diameter_param(int n, int D);

// For the Alt* checks: large enough that an ECS interval starting in the
// first cycle unrolling and D later re-appearances fit.
Round alt_horizon(const LassoSequence& l, int D, int x);

// A horizon argument <= 0 selects the matching default everywhere below.
CheckResult check_liveness(const LassoSequence& l);
CheckResult check_safety(const LassoSequence& l, int x, Round horizon = 0);
CheckResult check_estable(const LassoSequence& l, int D);
CheckResult check_alt_liveness(const LassoSequence& l, int D, int x,
                               Round horizon = 0);
CheckResult check_alt_safety(const LassoSequence& l, int x,
                             Round horizon = 0);
CheckResult check_alt_estable(const LassoSequence& l, int D,
                              Round horizon = 0);
CheckResult check_mad(const LassoSequence& l, int x, int y, int D,
                      Round horizon = 0);
CheckResult check_vsrc(const LassoSequence& l, int window, int D);

}  // namespace msgadv
