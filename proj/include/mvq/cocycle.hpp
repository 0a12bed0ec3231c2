#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvq/coloring.hpp"

namespace mvq {

// A finite group given by its operation table. Identity and inverses are
// derived and checked at construction.
struct FiniteGroup {
  int n = 0;
  std::vector<int> mul;  // row-major, mul[a*n+b] = a·b
  std::vector<std::string> labels;
  int identity = 0;
  std::vector<int> inverse;

  FiniteGroup() = default;
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names = {});

  int op(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
  std::string label(int a) const;
};

// phi : Q x Q -> G together with its value group.
struct CocycleTable {
  FiniteGroup group;
  int q_order = 0;
  std::vector<int> phi;  // row-major over Q x Q

  int at(int a, int b) const { return phi[static_cast<std::size_t>(a) * q_order + b]; }
};

// Quandle 2-cocycle conditions plus compatibility with every operator:
//   (i)  phi(a,a) = e
//   (ii) phi(a,b)·phi(a*c,b*c) = phi(a,c)·phi(a*b,c)
//   (iii) phi(a,b) = phi(f(a),f(b)) for every operator f
bool is_operator_cocycle(const OperatorQuandle& oq, const CocycleTable& phi);

// An element of the group ring ZG as multiplicities per group element. Here
// every coloring contributes a single group element, so values are
// nonnegative with total mass = number of colorings; the zero element (empty
// map) encodes "no colorings".
struct GroupRingElement {
  std::map<int, std::int64_t> coeff;
  bool operator==(const GroupRingElement& o) const = default;
  std::int64_t total() const;
};

std::string to_string(const GroupRingElement& v, const FiniteGroup& g);

// Sum over colorings of the product over classical crossings of
// phi(under-in, over)^sign, evaluated in G in walk order. Throws
// DomainError when phi fails is_operator_cocycle.
GroupRingElement cocycle_invariant(const Diagram& d, const OperatorQuandle& oq,
                                   const CocycleTable& phi);

// Weight of a single coloring (the product over classical crossings).
int coloring_weight(const Diagram& d, const CocycleTable& phi, const Coloring& col);

// Text format:
//   group <order>
//   <order> rows of the group table
//   phi
//   <|Q|> rows of |Q| group element indices
CocycleTable parse_cocycle(const std::string& text, int q_order);
std::string serialize_cocycle(const CocycleTable& phi);

}  // namespace mvq
