#include "ueq/dot.hpp"

#include <sstream>

namespace ueq {

std::string emit_dot(const FiniteTopology& t) {
  std::ostringstream out;
  out << "digraph specialization {\n";
  for (int x = 0; x < t.size(); ++x) out << "  " << x << ";\n";
  for (int x = 0; x < t.size(); ++x)
    t.min_nbhd(x).for_each([&](int y) {
      if (y != x) out << "  " << x << " -> " << y << ";\n";
    });
  out << "}\n";
  return out.str();
}

}  // namespace ueq
