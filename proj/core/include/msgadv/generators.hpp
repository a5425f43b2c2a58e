// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "msgadv/adversary.hpp"
#include "msgadv/random.hpp"

namespace msgadv {

struct AdversaryParams {
  int n = 0;
  int D = 1;
  int x = 0;  // safety parameter (MAD only; AltEStable uses D)
  int y = 0;  // liveness parameter (MAD only; AltEStable uses D)
  std::uint64_t seed = 0;
  Round rgst_target = 0;  // 0 means "same as rsr_target"
  Round rsr_target = 1;
  // Alt generators only.
  bool spurious_root = false;
  bool consecutive_reappearances = false;
};

struct GeneratedLasso {
  LassoSequence lasso;
  // As reported by the checker; for the Alt generators it may name an
  // earlier root than the planted one.
  AdversaryCertificate certificate;
  AdversaryCertificate planted;
  int attempts = 0;
};

inline constexpr int kGeneratorRetries = 64;

// Throw InfeasibleParams for impossible parameters and GenerationFailed
// when the retry budget runs out.
GeneratedLasso generate_estable(const AdversaryParams& p);
GeneratedLasso generate_alt_estable(const AdversaryParams& p);
GeneratedLasso generate_mad(const AdversaryParams& p);

// Graph whose root components are exactly `roots` (pairwise disjoint,
// non-empty). Every other process is reachable from some root; extra
// edges are added with probability density_pct / 100.
CommGraph planted_graph(Rng& rng, int n, const std::vector<ProcessSet>& roots,
                        int density_pct);

// Single root `root`; any window of D such graphs (with arbitrary graphs in
// between) delivers all of `root` to every process.
CommGraph safe_single_rooted_graph(Rng& rng, int n, ProcessSet root, int D);

}  // namespace msgadv
