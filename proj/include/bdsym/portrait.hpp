#pragma once

#include <bdsym/core.hpp>

#include <string>
#include <utility>
#include <vector>

namespace bdsym {

/// Asynchronous state portrait. Nodes are all 2^n states; an edge mu -> mu'
/// exists when some nonzero sub-mask nu of the excited set gives Phi^nu(mu) = mu'.
struct PortraitGraph {
  int n = 0;
  std::vector<std::uint32_t> excited;  // per node, canonical order
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // sorted, no self-loops

  std::vector<std::uint32_t> successors(std::uint32_t node) const;
};

PortraitGraph build_portrait(const TruthTable& phi);

/// Deterministic GraphViz digraph.
std::string render_dot(const PortraitGraph& graph);

}  // namespace bdsym
