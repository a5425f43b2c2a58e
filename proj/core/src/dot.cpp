// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "msgadv/dot.hpp"

#include <sstream>

namespace msgadv {

namespace {

void emit(std::ostringstream& os, const std::string& name, ProcessSet nodes,
          const std::vector<ProcessSet>& roots, const std::vector<Edge>& edges) {
  ProcessSet in_root;
  for (ProcessSet r : roots) in_root |= r;
  os << "digraph \"" << name << "\" {\n";
  nodes.for_each([&](ProcessId p) {
    os << "  p" << p << " [shape=" << (in_root.contains(p) ? "doublecircle" : "circle")
       << "];\n";
  });
  for (const Edge& e : edges) os << "  p" << e.from << " -> p" << e.to << ";\n";
  os << "}\n";
}

}  // namespace

std::string to_dot(const CommGraph& g, const std::string& name) {
  std::ostringstream os;
  emit(os, name, g.processes(), root_components(g), g.edges(true));
  return os.str();
}

std::string lasso_to_dot(const LassoSequence& l, Round horizon) {
  if (horizon <= 0) horizon = l.default_horizon();
  std::ostringstream os;
  for (Round r = 1; r <= horizon; ++r) {
    emit(os, "G" + std::to_string(r), l.graph(r).processes(), l.roots(r),
         l.graph(r).edges(true));
  }
  return os.str();
}

std::string approx_to_dot(const PartialGraph& g, ProcessId owner,
                          const std::string& name) {
  std::ostringstream os;
  emit(os, name, g.endpoints() | ProcessSet::single(owner), g.roots(owner),
       g.edges());
  return os.str();
}

}  // namespace msgadv
