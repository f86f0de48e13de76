#pragma once

#include <string>

#include "qcw/ar.hpp"
#include "qcw/forms.hpp"

namespace qcw {

// Directed graph of the knitted component in DOT format: slice arrows
// solid, translation lines dashed. Node ids are synthetic (n0, n1, ...)
// with the dimension vector, and optionally a module name, in the label.
std::string ar_component_dot(const ARComponent& comp, const std::vector<std::string>& node_names = {});

// Undirected DOT graph of a bigraph: solid edges plain, dotted edges
// dashed, multiplicities > 1 as edge labels. Isolated vertices can be
// dropped (they carry no quadratic cross terms).
std::string bigraph_dot(const Bigraph& b, bool drop_isolated);

}  // namespace qcw
