#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvq/cocycle.hpp"
#include "mvq/coloring.hpp"

namespace mvq {

// Coloring-count vectors q(u) over the typing schemes u, following the
// systematic strategy for diagrams with k virtual-crossing types: for each
// scheme u (a k-tuple with entries up to 2k) and each ordered quadruple of
// distinct pairwise commuting automorphisms, bind type i to the u_i-th member
// of the quadruple and count colorings. Two schemes whose vectors differ give
// nonequivalent typed versions of the diagram.
struct InvariantProfile {
  std::vector<std::vector<int>> schemes;        // the generalized U set
  std::vector<std::vector<int>> tuples;         // quadruple index lists into auts
  std::vector<Permutation> auts;
  std::vector<std::vector<std::uint64_t>> counts;  // counts[scheme][tuple]

  bool schemes_distinguished(std::size_t i, std::size_t j) const {
    return counts[i] != counts[j];
  }
};

InvariantProfile invariant_profile(const Diagram& d, const MultiplicationTable& quandle,
                                   int k_types, int tuple_size = 4);

// Nonequivalence report for a pair of diagrams over one quandle: compares
// coloring counts for every commuting tuple bound to the (shared) type
// alphabet, and cocycle values when phi is given. Never claims equivalence.
struct DistinguishReport {
  struct Line {
    std::vector<int> tuple;  // operator indices bound to the type alphabet
    std::uint64_t col1 = 0, col2 = 0;
    std::optional<std::string> coc1, coc2;
    bool differs = false;
  };
  std::vector<std::string> types;  // binding order
  std::vector<Line> lines;
  bool distinguished = false;
};

DistinguishReport distinguish(const Diagram& d1, const Diagram& d2,
                              const MultiplicationTable& quandle,
                              const CocycleTable* phi = nullptr);

}  // namespace mvq
