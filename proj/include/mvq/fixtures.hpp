#pragma once

#include <string>
#include <vector>

#include "mvq/diagram.hpp"

namespace mvq {

// Built-in diagrams: the small virtual knots 2_1 and 3_1..3_7 in their
// multi-virtual versions (virtual crossings typed alpha/beta), the twist
// family K(n), the flat chain family L(i,j) over box/circle/node types, the
// unknot, and the two permutationally equivalent links special_pair_left /
// special_pair_right.
//
// Accepted names: "unknot", "2_1", "3_1".."3_7", "K(n)" e.g. "K(3)",
// "L(i,j)" e.g. "L(0,2)", "special_pair_left", "special_pair_right".
Diagram builtin_diagram(const std::string& name);

std::vector<std::string> builtin_diagram_names();

Diagram twist_knot_k(int n);
Diagram chain_link_l(int i, int j);

}  // namespace mvq
