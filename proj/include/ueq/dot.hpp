#pragma once

#include <string>

#include "ueq/topology.hpp"

namespace ueq {

/// DOT digraph of the specialization preorder: edge x -> y iff x lies in the
/// closure of {y} (equivalently y is in the minimal neighborhood of x).
/// Self-loops are omitted; node and edge order is deterministic.
std::string emit_dot(const FiniteTopology& t);

}  // namespace ueq
