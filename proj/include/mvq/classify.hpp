#pragma once

#include <vector>

#include "mvq/table.hpp"

namespace mvq {

// Exhaustively checked identity flags of a finite magma.
//
//   right_quasigroup : every column is a permutation
//   rack             : right quasigroup + (x*y)*z = (x*z)*(y*z)
//   quandle          : rack + x*x = x
//   medial           : (x*u)*(v*y) = (x*v)*(u*y)
//   graphic          : (x*y)*x = x*y
//   paragraphic      : x*(y*x) = x*y
//   flexible         : x*(y*x) = (x*y)*x
//   rmlt_abelian     : all right translations pairwise commute
//   connected        : Rmlt acts transitively (computed only for racks)
struct IdentityProfile {
  bool right_quasigroup = false;
  bool rack = false;
  bool quandle = false;
  bool medial = false;
  bool graphic = false;
  bool paragraphic = false;
  bool flexible = false;
  bool rmlt_abelian = false;
  bool connected = false;
};

IdentityProfile classify_magma(const MultiplicationTable& t);

// True iff the orbit of 0 under <R_x> is all of Q. Requires a rack.
bool is_connected(const MultiplicationTable& t);

PermGroup right_multiplication_group(const MultiplicationTable& t,
                                     std::size_t element_budget = 1000000);

// Rdis(Q) = <R_x^{-1} R_y>. Requires a rack.
PermGroup displacement_group(const MultiplicationTable& t,
                             std::size_t element_budget = 1000000);

// Partition of {0..n-1} into classes of equal right translations (equal
// columns). Classes are sorted by least element; elements ascending.
std::vector<std::vector<int>> cayley_kernel(const MultiplicationTable& t);

// All right-quasigroup tables of order n (each column a permutation),
// filtered by pred as a pruning hook. Used by the identity-equivalence
// property tests; practical for n <= 4 only.
std::vector<MultiplicationTable> enumerate_right_quasigroups(int n);

// All racks of order n (right self-distributive right quasigroups).
std::vector<MultiplicationTable> enumerate_racks(int n);

}  // namespace mvq
