// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace msgadv {

namespace {

std::uint64_t bit(ProcessId p) { return std::uint64_t{1} << (p - 1); }

std::uint64_t out_of(std::span<const std::uint64_t> out, ProcessId p) {
  const auto idx = static_cast<std::size_t>(p - 1);
  return idx < out.size() ? out[idx] : 0;
}

// Tarjan's SCC algorithm over at most 64 vertices.
class Tarjan {
 public:
  Tarjan(std::uint64_t vertices, std::span<const std::uint64_t> out)
      : vertices_(vertices), out_(out) {
    index_.fill(-1);
  }

  std::vector<std::uint64_t> run() {
    for (std::uint64_t m = vertices_; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (index_[v] < 0) visit(v);
    }
    return std::move(components_);
  }

 private:
  void visit(int v) {
    index_[v] = low_[v] = next_index_++;
    stack_.push_back(v);
    on_stack_ |= std::uint64_t{1} << v;
    const std::uint64_t succ =
        (static_cast<std::size_t>(v) < out_.size() ? out_[v] : 0) & vertices_;
    for (std::uint64_t m = succ; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (index_[w] < 0) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if ((on_stack_ >> w) & 1U) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] == index_[v]) {
      std::uint64_t comp = 0;
      int w = -1;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_ &= ~(std::uint64_t{1} << w);
        comp |= std::uint64_t{1} << w;
      } while (w != v);
      components_.push_back(comp);
    }
  }

  std::uint64_t vertices_;
  std::span<const std::uint64_t> out_;
  std::array<int, kMaxProcesses> index_{};
  std::array<int, kMaxProcesses> low_{};
  std::vector<int> stack_;
  std::uint64_t on_stack_ = 0;
  int next_index_ = 0;
  std::vector<std::uint64_t> components_;
};

}  // namespace

std::vector<ProcessSet> root_components_of(ProcessSet vertices,
                                           std::span<const std::uint64_t> out) {
  const std::uint64_t vs = vertices.mask();
  std::vector<ProcessSet> roots;
  for (std::uint64_t comp : Tarjan(vs, out).run()) {
    bool has_external_in = false;
    for (std::uint64_t m = vs & ~comp; m != 0 && !has_external_in;
         m &= m - 1) {
      const int u = std::countr_zero(m);
      const std::uint64_t succ =
          static_cast<std::size_t>(u) < out.size() ? out[u] : 0;
      has_external_in = (succ & comp) != 0;
    }
    if (!has_external_in) roots.push_back(ProcessSet::from_mask(comp));
  }
  std::sort(roots.begin(), roots.end(), LexLess{});
  return roots;
}

// ---------------------------------------------------------------------------
// CommGraph

CommGraph::CommGraph(int n) : n_(n) {
  if (n < 1 || n > kMaxProcesses) {
    throw InvalidArgument("n must be in 1.." + std::to_string(kMaxProcesses) +
                          ", got " + std::to_string(n));
  }
  out_.assign(static_cast<std::size_t>(n), 0);
  for (ProcessId p = 1; p <= n; ++p) out_[p - 1] = bit(p);
}

CommGraph::CommGraph(int n, std::span<const Edge> edges, SelfLoops loops)
    : CommGraph(n) {
  if (loops == SelfLoops::kAsGiven) std::fill(out_.begin(), out_.end(), 0);
  for (const Edge& e : edges) add_edge(e.from, e.to);
}

CommGraph::CommGraph(int n, std::initializer_list<Edge> edges)
    : CommGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void CommGraph::add_edge(ProcessId from, ProcessId to) {
  check_process_id(from, n_);
  check_process_id(to, n_);
  out_[from - 1] |= bit(to);
}

bool CommGraph::has_edge(ProcessId from, ProcessId to) const {
  if (from < 1 || from > n_ || to < 1 || to > n_) return false;
  return (out_[from - 1] & bit(to)) != 0;
}

ProcessSet CommGraph::out(ProcessId p) const {
  check_process_id(p, n_);
  return ProcessSet::from_mask(out_[p - 1]);
}

ProcessSet CommGraph::in(ProcessId p) const {
  check_process_id(p, n_);
  ProcessSet s;
  for (ProcessId q = 1; q <= n_; ++q) {
    if (out_[q - 1] & bit(p)) s.insert(q);
  }
  return s;
}

std::vector<Edge> CommGraph::edges(bool with_self_loops) const {
  std::vector<Edge> es;
  for (ProcessId q = 1; q <= n_; ++q) {
    ProcessSet::from_mask(out_[q - 1]).for_each([&](ProcessId t) {
      if (with_self_loops || t != q) es.push_back({q, t});
    });
  }
  return es;
}

std::string GraphViolation::describe() const {
  const std::string e =
      "(" + std::to_string(edge.from) + "->" + std::to_string(edge.to) + ")";
  switch (kind) {
    case Kind::kMissingSelfLoop:
      return "missing self-loop " + e;
    case Kind::kEndpointOutOfRange:
      return "endpoint out of range " + e;
  }
  return e;
}

std::vector<GraphViolation> validate_graph(const CommGraph& g) {
  std::vector<GraphViolation> v;
  for (ProcessId p = 1; p <= g.n(); ++p) {
    if (!g.has_edge(p, p)) {
      v.push_back({GraphViolation::Kind::kMissingSelfLoop, {p, p}});
    }
  }
  return v;
}

std::vector<GraphViolation> validate_edges(int n, std::span<const Edge> edges) {
  std::vector<GraphViolation> v;
  std::vector<bool> loop(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
  for (const Edge& e : edges) {
    if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
      v.push_back({GraphViolation::Kind::kEndpointOutOfRange, e});
    } else if (e.from == e.to) {
      loop[e.from] = true;
    }
  }
  for (ProcessId p = 1; p <= n; ++p) {
    if (!loop[p]) v.push_back({GraphViolation::Kind::kMissingSelfLoop, {p, p}});
  }
  return v;
}

std::vector<ProcessSet> root_components(const CommGraph& g) {
  return root_components_of(g.processes(), g.out_masks());
}

bool is_weakly_connected(const CommGraph& g) {
  const int n = g.n();
  std::vector<std::uint64_t> undirected(g.out_masks().begin(),
                                        g.out_masks().end());
  for (ProcessId q = 1; q <= n; ++q) {
    g.out(q).for_each([&](ProcessId t) { undirected[t - 1] |= bit(q); });
  }
  std::uint64_t seen = bit(1);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m != 0; m &= m - 1) {
      next |= undirected[std::countr_zero(m)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == ProcessSet::all(n).mask();
}

int hop_distance(const CommGraph& g, ProcessId from, ProcessId to) {
  check_process_id(from, g.n());
  check_process_id(to, g.n());
  std::uint64_t seen = bit(from);
  std::uint64_t frontier = seen;
  for (int d = 0; frontier != 0; ++d) {
    if (frontier & bit(to)) return d;
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m != 0; m &= m - 1) {
      next |= g.out_masks()[std::countr_zero(m)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return -1;
}

// ---------------------------------------------------------------------------
// PartialGraph

void PartialGraph::add_edge(ProcessId from, ProcessId to) {
  if (from < 1 || from > kMaxProcesses || to < 1 || to > kMaxProcesses) {
    throw InvalidArgument("edge endpoint out of range");
  }
  if (out_.size() < static_cast<std::size_t>(from)) out_.resize(from, 0);
  out_[from - 1] |= bit(to);
}

bool PartialGraph::has_edge(ProcessId from, ProcessId to) const {
  return from >= 1 && to >= 1 && to <= kMaxProcesses &&
         (out_of(out_, from) & bit(to)) != 0;
}

bool PartialGraph::has_out_edge(ProcessId from) const {
  return from >= 1 && out_of(out_, from) != 0;
}

void PartialGraph::merge(const PartialGraph& other) {
  if (out_.size() < other.out_.size()) out_.resize(other.out_.size(), 0);
  for (std::size_t i = 0; i < other.out_.size(); ++i) out_[i] |= other.out_[i];
}

ProcessSet PartialGraph::endpoints() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < out_.size(); ++i) {
    if (out_[i] != 0) m |= (std::uint64_t{1} << i) | out_[i];
  }
  return ProcessSet::from_mask(m);
}

std::vector<Edge> PartialGraph::edges() const {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < out_.size(); ++i) {
    const auto from = static_cast<ProcessId>(i + 1);
    ProcessSet::from_mask(out_[i]).for_each(
        [&](ProcessId t) { es.push_back({from, t}); });
  }
  return es;
}

bool PartialGraph::empty() const {
  return std::all_of(out_.begin(), out_.end(),
                     [](std::uint64_t m) { return m == 0; });
}

bool PartialGraph::subset_of(const CommGraph& g) const {
  const auto gout = g.out_masks();
  for (std::size_t i = 0; i < out_.size(); ++i) {
    const std::uint64_t have = i < gout.size() ? gout[i] : 0;
    if ((out_[i] & ~have) != 0) return false;
  }
  return true;
}

bool PartialGraph::subset_of(const PartialGraph& other) const {
  for (std::size_t i = 0; i < out_.size(); ++i) {
    if ((out_[i] & ~out_of(other.out_, static_cast<ProcessId>(i + 1))) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<ProcessSet> PartialGraph::roots(ProcessId owner) const {
  return root_components_of(endpoints() | ProcessSet::single(owner), out_);
}

bool operator==(const PartialGraph& a, const PartialGraph& b) {
  const std::size_t n = std::max(a.out_.size(), b.out_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = static_cast<ProcessId>(i + 1);
    if (out_of(a.out_, p) != out_of(b.out_, p)) return false;
  }
  return true;
}

}  // namespace msgadv
