#pragma once

#include <string>
#include <vector>

#include "mvq/table.hpp"

namespace mvq {

// The quotient ring Z_n[t^{+-1}]/(f(t)). Elements are the residue polynomials
// of degree < deg f, indexed by their coefficient vector read little-endian in
// base n. Construction fails unless both the leading and constant coefficient
// of f are units mod n (so the quotient has n^deg f elements and t is
// invertible).
struct QuotientRing {
  int mod_n = 0;
  std::vector<int> poly;  // f coefficients, constant term first
  int degree = 0;
  int size = 0;

  QuotientRing(int n, std::vector<int> f);

  std::vector<int> coeffs(int e) const;
  int index(const std::vector<int>& coeffs) const;

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int mul(int a, int b) const;
  int zero() const { return 0; }
  int one() const { return index_of_one; }
  int t() const { return index_of_t; }
  int t_inverse() const;  // the element x with t*x = 1

  std::string label(int e) const;  // "0", "1", "t", "1+t", "t^2+t^3", ...

  int index_of_one = 0;
  int index_of_t = 0;
};

// Dihedral quandle on Z_n: x*y = 2y - x (mod n).
MultiplicationTable dihedral_quandle(int n);

// Alexander quandle on a quotient ring: a*b = t a + (1-t) b.
MultiplicationTable alexander_quandle(const QuotientRing& ring);

// Q_m(e) on Z_3 x Z_2^m; e is a bit vector of length m. Element (i,a) has
// index i*2^m + a with a read as a binary number. Labels are "(i,bits)".
MultiplicationTable qme(int m, const std::vector<int>& e);

// Permutational rack: x*y = f(x).
MultiplicationTable permutational_rack(const Permutation& f);

// Text format (shared with the CLI):
//   # comment lines allowed anywhere
//   order <n>
//   labels <n whitespace-free tokens>     (optional)
//   n rows of n integers
MultiplicationTable parse_quandle_table(const std::string& text);
std::string serialize_quandle_table(const MultiplicationTable& t);

// Shipped catalog fixtures (tables for ConnectedQuandle(n,m) as used in the
// worked examples), generated in-process. cq(10,1) and cq(5,2) are verbatim
// printed tables; the order-6 and order-12 entries are fixed relabelings of
// the Q_m(e) construction standing in for the catalog entries they are
// isomorphic to.
MultiplicationTable connected_quandle_fixture(int n, int m);

// Names of all shipped fixtures as (n,m) pairs.
std::vector<std::pair<int, int>> connected_quandle_fixture_names();

}  // namespace mvq
