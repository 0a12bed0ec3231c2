#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvq/diagram.hpp"
#include "mvq/table.hpp"

namespace mvq {

// A quandle together with one automorphism per virtual-crossing type. The
// operators must pairwise commute; check() verifies both requirements.
struct OperatorQuandle {
  MultiplicationTable quandle;
  std::map<std::string, Permutation> operators;

  void check() const;
  const Permutation& op(const std::string& type) const;
};

// A coloring assigns a quandle element to every semiarc. colors[c][i] is the
// color of semiarc (c,i), the segment after passage i; components without
// passages have a single entry.
struct Coloring {
  std::vector<std::vector<int>> colors;
  bool operator==(const Coloring& o) const = default;
};

// All colorings, in lexicographic order of the underlying search variables
// (per-component seeds plus forward-referenced over-colors, in walk order).
// The search walks each component once; every semiarc is a function of its
// predecessor except at under-passages whose over-strand has not been reached
// yet, which branch.
std::vector<Coloring> enumerate_colorings(const Diagram& d, const OperatorQuandle& oq);

// Coloring count without materializing the assignments.
std::uint64_t count_colorings(const Diagram& d, const OperatorQuandle& oq);

// Independent brute force: tries all |Q|^semiarcs assignments and checks every
// passage relation directly. Throws BudgetError when |Q|^semiarcs > budget.
std::uint64_t coloring_oracle(const Diagram& d, const OperatorQuandle& oq,
                              std::uint64_t budget = 10000000);

// Checks a full assignment against every passage relation.
bool is_valid_coloring(const Diagram& d, const OperatorQuandle& oq, const Coloring& col);

}  // namespace mvq
