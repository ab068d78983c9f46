#include <bdsym/portrait.hpp>

#include <algorithm>

namespace bdsym {

std::vector<std::uint32_t> PortraitGraph::successors(std::uint32_t node) const {
  std::vector<std::uint32_t> out;
  auto lo = std::lower_bound(edges.begin(), edges.end(), std::pair{node, std::uint32_t{0}});
  for (auto it = lo; it != edges.end() && it->first == node; ++it) out.push_back(it->second);
  return out;
}

PortraitGraph build_portrait(const TruthTable& phi) {
  PortraitGraph g;
  g.n = phi.dim();
  g.excited.resize(phi.size());
  for (std::uint32_t mu = 0; mu < phi.size(); ++mu) {
    const auto exc = phi[mu] ^ mu;
    g.excited[mu] = exc;
    std::vector<std::uint32_t> targets;
    // nonzero sub-masks of exc
    for (std::uint32_t nu = exc; nu != 0; nu = (nu - 1) & exc) targets.push_back(nu_apply_raw(phi, nu, mu));
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (auto t : targets) g.edges.emplace_back(mu, t);
  }
  return g;
}

std::string render_dot(const PortraitGraph& graph) {
  std::string out = "digraph portrait {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::uint32_t mu = 0; mu < graph.excited.size(); ++mu) {
    const auto s = bits_to_string(graph.n, mu);
    const auto e = bits_to_string(graph.n, graph.excited[mu]);
    std::string marked;
    for (int i = 0; i < graph.n; ++i) {
      marked += s[static_cast<std::size_t>(i)];
      if (e[static_cast<std::size_t>(i)] == '1') marked += '*';
    }
    out += "  \"" + s + "\" [label=\"" + marked + "\\nexc=" + e + "\"];\n";
  }
  for (const auto& [a, b] : graph.edges)
    out += "  \"" + bits_to_string(graph.n, a) + "\" -> \"" + bits_to_string(graph.n, b) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace bdsym
