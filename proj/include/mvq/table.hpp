#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvq/error.hpp"
#include "mvq/perm.hpp"

namespace mvq {

// A finite magma (Q,*) on {0..n-1} as an n x n table, row acted on, column
// acting: cells[x*n+y] = x*y.  An optional label vector carries display names
// for carriers like ring elements or pairs (i,a).
struct MultiplicationTable {
  int n = 0;
  std::vector<int> cells;
  std::vector<std::string> labels;  // empty or size n

  MultiplicationTable() = default;
  MultiplicationTable(int order, std::vector<int> c, std::vector<std::string> l = {});

  int at(int x, int y) const { return cells[static_cast<std::size_t>(x) * n + y]; }
  int& at(int x, int y) { return cells[static_cast<std::size_t>(x) * n + y]; }

  std::string label(int x) const;

  bool operator==(const MultiplicationTable& o) const {
    return n == o.n && cells == o.cells;
  }
};

// Column y as a map x -> x*y. Throws DomainError when the column is not a
// bijection.
Permutation right_translation(const MultiplicationTable& t, int y);

bool is_right_quasigroup(const MultiplicationTable& t);

// The unique z with z*y = x, i.e. z = R_y^{-1}(x). The convention is fixed by
// the printed division tables the worked examples use: dividing by the right
// factor undoes multiplying by it, (z*y)/y = z.
int right_divide(const MultiplicationTable& t, int x, int y);

// Full division table, cells[x][y] = x/y.
MultiplicationTable division_table(const MultiplicationTable& t);

// All right translations R_0..R_{n-1}; throws DomainError unless a right
// quasigroup.
std::vector<Permutation> right_translations(const MultiplicationTable& t);

}  // namespace mvq
