#include "qcw/graphviz.hpp"

#include <stdexcept>

#include "qcw/intvec.hpp"

namespace qcw {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string ar_component_dot(const ARComponent& comp, const std::vector<std::string>& node_names) {
  if (!node_names.empty() && node_names.size() != comp.nodes.size())
    throw std::invalid_argument("ar_component_dot: one name per node expected");
  std::string out = "digraph component {\n  rankdir=LR;\n";
  for (size_t i = 0; i < comp.nodes.size(); ++i) {
    std::string label;
    if (!node_names.empty() && !node_names[i].empty()) label = dot_escape(node_names[i]) + "\\n";
    label += dot_escape(vec_to_string(comp.nodes[i].dim));
    out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (const ARArrow& a : comp.arrows) {
    out += "  n" + std::to_string(a.from) + " -> n" + std::to_string(a.to);
    if (a.mult > 1) out += " [label=\"" + std::to_string(a.mult) + "\"]";
    out += ";\n";
  }
  for (size_t i = 0; i < comp.nodes.size(); ++i) {
    const ARNode& nd = comp.nodes[i];
    if (nd.power == 0) continue;
    auto it = comp.node_at.find({nd.orbit, nd.power - 1});
    if (it == comp.node_at.end()) continue;
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(it->second) +
           " [style=dashed, constraint=false];\n";
  }
  out += "}\n";
  return out;
}

std::string bigraph_dot(const Bigraph& b, bool drop_isolated) {
  int n = b.n();
  std::vector<bool> keep(n, !drop_isolated);
  if (drop_isolated)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && (b.solid[i][j] != 0 || b.dotted[i][j] != 0)) keep[i] = true;

  std::string out = "graph bigraph {\n";
  for (int i = 0; i < n; ++i)
    if (keep[i]) out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(b.labels[i]) + "\"];\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (b.solid[i][j] != 0) {
        out += "  n" + std::to_string(i) + " -- n" + std::to_string(j);
        if (b.solid[i][j] > 1) out += " [label=\"" + std::to_string(b.solid[i][j]) + "\"]";
        out += ";\n";
      }
      if (b.dotted[i][j] != 0) {
        out += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + " [style=dashed";
        if (b.dotted[i][j] > 1) out += ", label=\"" + std::to_string(b.dotted[i][j]) + "\"";
        out += "];\n";
      }
    }
  out += "}\n";
  return out;
}

}  // namespace qcw
