// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/process_set.hpp"

#include <algorithm>
#include <sstream>

namespace msgadv {

ProcessSet::ProcessSet(std::initializer_list<ProcessId> ids) {
  for (ProcessId p : ids) insert(p);
}

ProcessSet::ProcessSet(const std::vector<ProcessId>& ids) {
  for (ProcessId p : ids) insert(p);
}

ProcessSet ProcessSet::all(int n) {
  if (n < 0 || n > kMaxProcesses) {
    throw InvalidArgument("process count " + std::to_string(n) +
                          " outside 0.." + std::to_string(kMaxProcesses));
  }
  return from_mask(n == kMaxProcesses ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << n) - 1);
}

ProcessSet ProcessSet::single(ProcessId p) {
  ProcessSet s;
  s.insert(p);
  return s;
}

void ProcessSet::insert(ProcessId p) {
  if (p < 1 || p > kMaxProcesses) {
    throw InvalidArgument("process id " + std::to_string(p) + " out of range");
  }
  mask_ |= std::uint64_t{1} << (p - 1);
}

void ProcessSet::erase(ProcessId p) {
  if (p >= 1 && p <= kMaxProcesses) mask_ &= ~(std::uint64_t{1} << (p - 1));
}

std::vector<ProcessId> ProcessSet::members() const {
  std::vector<ProcessId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](ProcessId p) { out.push_back(p); });
  return out;
}

std::string ProcessSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](ProcessId p) {
    if (!first) os << ',';
    os << p;
    first = false;
  });
  os << '}';
  return os.str();
}

bool lex_less(ProcessSet a, ProcessSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

void check_process_id(ProcessId p, int n) {
  if (p < 1 || p > n) {
    throw InvalidArgument("process id " + std::to_string(p) +
                          " not in 1.." + std::to_string(n));
  }
}

}  // namespace msgadv
