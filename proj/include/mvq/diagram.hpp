#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvq/error.hpp"

namespace mvq {

enum class PassageKind { Over, Under, Virtual };

// One passage of a strand through a crossing. For classical passages sign is
// the crossing sign; for virtual passages it is the chirality of this end
// (+ applies the type's operator, - applies its inverse; the two passages of
// one virtual crossing carry opposite chirality).
struct Passage {
  PassageKind kind = PassageKind::Over;
  int crossing = 0;
  int sign = +1;
  std::string type;  // virtual type label, empty for classical passages

  bool operator==(const Passage& o) const = default;
};

// An oriented multi-virtual link diagram as a typed signed Gauss code: one
// cyclic passage sequence per component. Diagrams are abstract codes; no
// planarity is implied or checked. Semiarc (c,i) is the segment between
// passage i and passage i+1 (mod size) of component c; a component with no
// passages is a free loop with a single semiarc.
struct Diagram {
  std::vector<std::string> types;  // declared alphabet, in declaration order
  std::vector<std::vector<Passage>> components;
  int next_id = 1;

  int fresh_id() { return next_id++; }

  int semiarc_count() const;
  int classical_crossings() const;
  int virtual_crossings() const;

  bool operator==(const Diagram& o) const {
    return types == o.types && components == o.components;
  }
};

// Checks all structural invariants; throws ValidationError naming the first
// violated one.
void validate(const Diagram& d);

// Grammar (line-based):
//   types: alpha beta
//   component: O+1 Valpha-2 U+1 Valpha+2
// '#' starts a comment. Symbols are O|U <sign> <id> for classical passages and
// V <type> <sign> <id> for virtual ones.
Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);

// All virtual types merged into one label "v".
Diagram virtual_projection(const Diagram& d);

// Rename types according to f, which must be injective on the labels in use.
Diagram retype(const Diagram& d, const std::map<std::string, std::string>& f);

// Typing schemes as restricted growth strings: a_1 = 1 and
// a_{i+1} <= max(a_1..a_i) + 1. Enumerated in lexicographic order; the count
// of length-k strings is the Bell number B_k.
std::vector<std::vector<int>> enumerate_typings(int k);
std::uint64_t bell_number(int k);

// The distinct tails of length k among the restricted growth strings of
// length 2k, in first-occurrence order of the lexicographic enumeration.
// These index the type-assignment schemes when comparing two diagrams with k
// virtual crossings each.
std::vector<std::vector<int>> typing_schemes_for_pairs(int k);

}  // namespace mvq
