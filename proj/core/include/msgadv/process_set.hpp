// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "msgadv/types.hpp"

namespace msgadv {

// Small set of process ids backed by a 64-bit mask (bit p-1 <=> p).
class ProcessSet {
 public:
  constexpr ProcessSet() = default;
  ProcessSet(std::initializer_list<ProcessId> ids);
  explicit ProcessSet(const std::vector<ProcessId>& ids);

  static constexpr ProcessSet from_mask(std::uint64_t mask) {
    ProcessSet s;
    s.mask_ = mask;
    return s;
  }
  // {1..n}
  static ProcessSet all(int n);
  static ProcessSet single(ProcessId p);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }

  bool contains(ProcessId p) const {
    return p >= 1 && p <= kMaxProcesses && ((mask_ >> (p - 1)) & 1U) != 0;
  }
  constexpr bool subset_of(ProcessSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  void insert(ProcessId p);
  void erase(ProcessId p);

  // Smallest member; requires !empty().
  ProcessId min() const { return std::countr_zero(mask_) + 1; }

  std::vector<ProcessId> members() const;
  std::string to_string() const;  // "{1,3,5}"

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      f(static_cast<ProcessId>(std::countr_zero(m) + 1));
    }
  }

  friend constexpr ProcessSet operator|(ProcessSet a, ProcessSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr ProcessSet operator&(ProcessSet a, ProcessSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend constexpr ProcessSet operator-(ProcessSet a, ProcessSet b) {
    return from_mask(a.mask_ & ~b.mask_);
  }
  ProcessSet& operator|=(ProcessSet o) {
    mask_ |= o.mask_;
    return *this;
  }

  friend constexpr bool operator==(ProcessSet, ProcessSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Lexicographic order on the sorted member lists; used wherever ties
// between root components are broken.
bool lex_less(ProcessSet a, ProcessSet b);

struct LexLess {
  bool operator()(ProcessSet a, ProcessSet b) const { return lex_less(a, b); }
};

void check_process_id(ProcessId p, int n);

}  // namespace msgadv
