#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvq/error.hpp"

namespace mvq {

// A permutation of {0..n-1}, stored as its image array.
struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  // Builds the permutation of degree n given by disjoint cycles, e.g.
  // {{1,2,3}} for the 3-cycle fixing everything else.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }
  bool is_identity() const;

  Permutation inverse() const;
  // (f.then(g))(x) = g(f(x)); apply f first.
  Permutation then(const Permutation& g) const;

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }

  std::string cycle_string() const;
};

bool commute(const Permutation& a, const Permutation& b);

// Composition f*g meaning "apply g, then f".
Permutation compose(const Permutation& f, const Permutation& g);

// Permutation group as an explicitly enumerated element set, lexicographically
// sorted by image array. Enumeration is breadth-first closure under
// composition with the generators; it throws BudgetError past element_budget.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
  bool is_abelian() const;
};

PermGroup generate_group(const std::vector<Permutation>& gens,
                         std::size_t element_budget = 1000000);

// Derived subgroup [G,G], enumerated within the same budget.
PermGroup derived_subgroup(const PermGroup& g, std::size_t element_budget = 1000000);

// Orbit of a point under the closure of the generators.
std::vector<int> orbit_of(int point, const std::vector<Permutation>& gens);

}  // namespace mvq
