// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "msgadv/process_set.hpp"
#include "msgadv/types.hpp"

namespace msgadv {

// Root components of the digraph restricted to `vertices`, where out[p-1]
// is the out-neighbourhood mask of p. A root component is the vertex set
// of a strongly connected component with no incoming edge from outside it.
// Result is sorted by LexLess.
std::vector<ProcessSet> root_components_of(ProcessSet vertices,
                                           std::span<const std::uint64_t> out);

// One round's communication graph over processes 1..n. Self-loops are
// mandatory; the default constructors add them.
class CommGraph {
 public:
  enum class SelfLoops { kAdd, kAsGiven };

  CommGraph() = default;
  explicit CommGraph(int n);
  CommGraph(int n, std::span<const Edge> edges,
            SelfLoops loops = SelfLoops::kAdd);
  CommGraph(int n, std::initializer_list<Edge> edges);

  int n() const { return n_; }
  ProcessSet processes() const { return ProcessSet::all(n_); }

  void add_edge(ProcessId from, ProcessId to);
  bool has_edge(ProcessId from, ProcessId to) const;
  ProcessSet out(ProcessId p) const;
  ProcessSet in(ProcessId p) const;
  std::span<const std::uint64_t> out_masks() const { return out_; }

  // Sorted; self-loops included iff `with_self_loops`.
  std::vector<Edge> edges(bool with_self_loops = true) const;

  friend bool operator==(const CommGraph&, const CommGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> out_;
};

struct GraphViolation {
  enum class Kind { kMissingSelfLoop, kEndpointOutOfRange };
  Kind kind;
  Edge edge;
  std::string describe() const;
};

// Empty result means the graph is valid.
std::vector<GraphViolation> validate_graph(const CommGraph& g);
std::vector<GraphViolation> validate_edges(int n, std::span<const Edge> edges);

std::vector<ProcessSet> root_components(const CommGraph& g);
bool is_weakly_connected(const CommGraph& g);

// Shortest directed path length from `from` to `to` (0 if equal); -1 when
// unreachable.
int hop_distance(const CommGraph& g, ProcessId from, ProcessId to);

// A process's view of one round's graph: a set of edges it has learned.
// The vertex set is implicit (edge endpoints plus the owning process).
class PartialGraph {
 public:
  void add_edge(ProcessId from, ProcessId to);
  bool has_edge(ProcessId from, ProcessId to) const;
  bool has_out_edge(ProcessId from) const;
  void merge(const PartialGraph& other);

  ProcessSet endpoints() const;
  std::vector<Edge> edges() const;
  bool empty() const;
  std::span<const std::uint64_t> out_masks() const { return out_; }

  // Every edge of this view is an edge of g.
  bool subset_of(const CommGraph& g) const;
  bool subset_of(const PartialGraph& other) const;

  std::vector<ProcessSet> roots(ProcessId owner) const;

  friend bool operator==(const PartialGraph& a, const PartialGraph& b);

 private:
  std::vector<std::uint64_t> out_;
};

}  // namespace msgadv
