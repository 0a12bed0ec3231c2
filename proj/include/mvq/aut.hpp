#pragma once

#include <optional>
#include <vector>

#include "mvq/table.hpp"

namespace mvq {

// All bijections f with f(x*y) = f(x)*f(y), by backtracking over partial
// assignments with homomorphism pruning. Output sorted lexicographically by
// image array.
std::vector<Permutation> automorphism_group(const MultiplicationTable& t);

// A table isomorphism A -> B, or nullopt. Same backtracking search.
std::optional<Permutation> find_isomorphism(const MultiplicationTable& a,
                                            const MultiplicationTable& b);

// All ordered k-tuples of pairwise commuting permutations from auts, in
// lexicographic order of index tuples. With require_distinct, members must be
// pairwise distinct.
std::vector<std::vector<int>> commuting_tuples(const std::vector<Permutation>& auts,
                                               int k, bool require_distinct);

bool is_automorphism(const MultiplicationTable& t, const Permutation& f);

}  // namespace mvq
