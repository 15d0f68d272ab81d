#include "edmf/dot.hpp"

#include <sstream>

namespace edmf {

std::string to_dot(const ARQuiver& q) {
  std::ostringstream os;
  os << "digraph " << (q.stable ? "stable_ar_quiver" : "ar_quiver") << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (int v : q.vertices) {
    os << "  V" << v << " [label=\"V" << v << "\"";
    if (q.is_projective(v)) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (const auto& a : q.arrows)
    os << "  V" << a.from << " -> V" << a.to << " [label=\"(" << a.valuation.first << ","
       << a.valuation.second << ")\"];\n";
  for (const auto& [v, t] : q.translation)
    if (t) os << "  V" << v << " -> V" << *t << " [style=dashed, label=\"tau\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace edmf
