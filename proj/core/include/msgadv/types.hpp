// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msgadv {

// Process identifiers form the contiguous range 1..n of a run.
using ProcessId = std::int32_t;

// Round 0 denotes the initial state (before round 1); communication
// rounds start at 1.
using Round = std::int64_t;

// Input, lock and decision values. Totally ordered; "maximum" is numeric.
using Value = std::int64_t;

// Bitset-backed process sets cap the system size.
inline constexpr int kMaxProcesses = 64;

struct Edge {
  ProcessId from = 0;
  ProcessId to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Caller handed us something outside an operation's preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Generator parameters that cannot be realized (e.g. D >= n).
class InfeasibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A randomized generator ran out of retries without producing a lasso
// that passes its checker.
class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed JSON or schema mismatch on load. `where` names the field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// A proof obligation of the protocol failed at run time. Carries the
// process and round at which it was detected.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(ProcessId pid, Round round, const std::string& what)
      : std::logic_error("p" + std::to_string(pid) + " round " +
                         std::to_string(round) + ": " + what),
        pid_(pid),
        round_(round) {}
  ProcessId pid() const noexcept { return pid_; }
  Round round() const noexcept { return round_; }

 private:
  ProcessId pid_;
  Round round_;
};

}  // namespace msgadv
