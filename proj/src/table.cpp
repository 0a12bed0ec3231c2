#include "mvq/table.hpp"

namespace mvq {

MultiplicationTable::MultiplicationTable(int order, std::vector<int> c,
                                         std::vector<std::string> l)
    : n(order), cells(std::move(c)), labels(std::move(l)) {
  if (n <= 0) throw ValidationError("table order must be positive");
  if (cells.size() != static_cast<std::size_t>(n) * n)
    throw ValidationError("table has wrong number of cells");
  for (int v : cells)
    if (v < 0 || v >= n) throw ValidationError("table cell out of range");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw ValidationError("label count does not match order");
}

std::string MultiplicationTable::label(int x) const {
  if (!labels.empty()) return labels[x];
  return std::to_string(x);
}

Permutation right_translation(const MultiplicationTable& t, int y) {
  std::vector<int> img(t.n);
  std::vector<char> seen(t.n, 0);
  for (int x = 0; x < t.n; ++x) {
    int v = t.at(x, y);
    if (seen[v]) throw DomainError("column " + std::to_string(y) + " is not a bijection");
    seen[v] = 1;
    img[x] = v;
  }
  return Permutation(std::move(img));
}

bool is_right_quasigroup(const MultiplicationTable& t) {
  std::vector<char> seen(t.n);
  for (int y = 0; y < t.n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < t.n; ++x) {
      int v = t.at(x, y);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

int right_divide(const MultiplicationTable& t, int x, int y) {
  int found = -1;
  for (int z = 0; z < t.n; ++z) {
    if (t.at(z, y) == x) {
      if (found >= 0) throw DomainError("division not unique: not a right quasigroup");
      found = z;
    }
  }
  if (found < 0) throw DomainError("division undefined: not a right quasigroup");
  return found;
}

MultiplicationTable division_table(const MultiplicationTable& t) {
  MultiplicationTable d(t.n, std::vector<int>(static_cast<std::size_t>(t.n) * t.n, 0),
                        t.labels);
  for (int y = 0; y < t.n; ++y) {
    Permutation inv = right_translation(t, y).inverse();
    for (int x = 0; x < t.n; ++x) d.at(x, y) = inv(x);
  }
  return d;
}

std::vector<Permutation> right_translations(const MultiplicationTable& t) {
  std::vector<Permutation> out;
  out.reserve(t.n);
  for (int y = 0; y < t.n; ++y) out.push_back(right_translation(t, y));
  return out;
}

}  // namespace mvq
