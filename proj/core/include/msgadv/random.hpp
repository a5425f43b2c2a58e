// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace msgadv {

std::uint64_t splitmix64(std::uint64_t x);

// Stream derived from (seed, salt); independent streams for independent
// salts.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

// mt19937_64 plus draw helpers with a fixed, implementation-independent
// mapping (the std distributions differ between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int range(int lo, int hi);
  bool chance(int num, int den) {
    return below(static_cast<std::uint64_t>(den)) <
           static_cast<std::uint64_t>(num);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace msgadv
