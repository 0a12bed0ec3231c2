#pragma once

#include <string>
#include <vector>

#include "mvq/table.hpp"

namespace mvq {

// a ~ b iff R_a and R_b commute.
bool r_commutes(const MultiplicationTable& t, int a, int b);

bool is_r_clique(const MultiplicationTable& t, const std::vector<int>& subset);

// Smallest superset of subset closed under * and /. Requires a rack.
std::vector<int> subrack_closure(const MultiplicationTable& t, std::vector<int> subset);

struct RCliqueReport {
  struct Entry {
    std::vector<int> members;
    bool is_maximal = true;
    bool subrack_closed = false;       // closed under * and /
    bool kernel_class_union = false;   // union of Cayley kernel classes
  };
  std::vector<Entry> cliques;
};

// All inclusion-maximal cliques of the commutation graph, sorted
// lexicographically, each annotated with its closure properties.
RCliqueReport maximal_r_cliques(const MultiplicationTable& t);

// One clique per line, members space separated, flags appended.
std::string serialize_report(const RCliqueReport& report, const MultiplicationTable& t);

}  // namespace mvq
