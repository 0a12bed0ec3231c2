#include "mvq/classify.hpp"

#include <algorithm>
#include <map>

namespace mvq {

namespace {

bool check_rack(const MultiplicationTable& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      int xy = t.at(x, y);
      for (int z = 0; z < t.n; ++z)
        if (t.at(xy, z) != t.at(t.at(x, z), t.at(y, z))) return false;
    }
  return true;
}

bool check_medial(const MultiplicationTable& t) {
  for (int x = 0; x < t.n; ++x)
    for (int u = 0; u < t.n; ++u)
      for (int v = 0; v < t.n; ++v) {
        int xu = t.at(x, u);
        int xv = t.at(x, v);
        for (int y = 0; y < t.n; ++y)
          if (t.at(xu, t.at(v, y)) != t.at(xv, t.at(u, y))) return false;
      }
  return true;
}

}  // namespace

IdentityProfile classify_magma(const MultiplicationTable& t) {
  IdentityProfile p;
  p.right_quasigroup = is_right_quasigroup(t);
  p.rack = p.right_quasigroup && check_rack(t);

  bool idem = true;
  for (int x = 0; x < t.n; ++x)
    if (t.at(x, x) != x) idem = false;
  p.quandle = p.rack && idem;

  p.medial = check_medial(t);

  p.graphic = true;
  p.paragraphic = true;
  p.flexible = true;
  for (int x = 0; x < t.n && (p.graphic || p.paragraphic || p.flexible); ++x)
    for (int y = 0; y < t.n; ++y) {
      int xy = t.at(x, y);
      int yx = t.at(y, x);
      if (t.at(xy, x) != xy) p.graphic = false;
      if (t.at(x, yx) != xy) p.paragraphic = false;
      if (t.at(x, yx) != t.at(xy, x)) p.flexible = false;
    }

  p.rmlt_abelian = p.right_quasigroup;
  if (p.right_quasigroup) {
    auto rs = right_translations(t);
    for (int a = 0; a < t.n && p.rmlt_abelian; ++a)
      for (int b = a + 1; b < t.n; ++b)
        if (!commute(rs[a], rs[b])) {
          p.rmlt_abelian = false;
          break;
        }
  }

  p.connected = p.rack && is_connected(t);
  return p;
}

bool is_connected(const MultiplicationTable& t) {
  if (!is_right_quasigroup(t) || !check_rack(t)) throw DomainError("is_connected: not a rack");
  auto orbit = orbit_of(0, right_translations(t));
  return static_cast<int>(orbit.size()) == t.n;
}

PermGroup right_multiplication_group(const MultiplicationTable& t, std::size_t element_budget) {
  return generate_group(right_translations(t), element_budget);
}

PermGroup displacement_group(const MultiplicationTable& t, std::size_t element_budget) {
  if (!is_right_quasigroup(t) || !check_rack(t))
    throw DomainError("displacement_group: not a rack");
  auto rs = right_translations(t);
  std::vector<Permutation> gens;
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) gens.push_back(rs[x].inverse().then(rs[y]));
  return generate_group(gens, element_budget);
}

std::vector<std::vector<int>> cayley_kernel(const MultiplicationTable& t) {
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int y = 0; y < t.n; ++y) {
    std::vector<int> col(t.n);
    for (int x = 0; x < t.n; ++x) col[x] = t.at(x, y);
    classes[col].push_back(y);
  }
  std::vector<std::vector<int>> out;
  out.reserve(classes.size());
  for (auto& [col, members] : classes) out.push_back(members);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<MultiplicationTable> enumerate_right_quasigroups(int n) {
  if (n > 4) throw BudgetError("enumerate_right_quasigroups: order capped at 4");
  // All permutations of {0..n-1} as candidate columns.
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<MultiplicationTable> out;
  std::vector<int> choice(n, 0);
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  while (true) {
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) cells[static_cast<std::size_t>(x) * n + y] = perms[choice[y]][x];
    out.push_back(MultiplicationTable(n, cells));
    int k = n - 1;
    while (k >= 0 && choice[k] + 1 == static_cast<int>(perms.size())) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
  return out;
}

std::vector<MultiplicationTable> enumerate_racks(int n) {
  std::vector<MultiplicationTable> out;
  for (auto& t : enumerate_right_quasigroups(n))
    if (check_rack(t)) out.push_back(std::move(t));
  return out;
}

}  // namespace mvq
