#include "mvq/aut.hpp"

#include <algorithm>

namespace mvq {

namespace {

// Backtracking search for all table homomorphic bijections src -> dst.
// Assigns images of 0,1,..,n-1 in order; after each assignment, every product
// with both factors and result already assigned is checked. With
// first_only, stops at the first hit.
struct IsoSearch {
  const MultiplicationTable& src;
  const MultiplicationTable& dst;
  bool first_only;
  std::vector<int> map;        // src element -> dst element or -1
  std::vector<char> used;      // dst element taken
  std::vector<Permutation> found;

  IsoSearch(const MultiplicationTable& s, const MultiplicationTable& d, bool fo)
      : src(s), dst(d), first_only(fo), map(s.n, -1), used(d.n, 0) {}

  bool consistent(int k) const {
    // Check all products involving the newly assigned element k.
    for (int i = 0; i <= k; ++i) {
      if (map[i] < 0) continue;
      int ik = src.at(i, k), ki = src.at(k, i);
      if (map[ik] >= 0 && dst.at(map[i], map[k]) != map[ik]) return false;
      if (map[ki] >= 0 && dst.at(map[k], map[i]) != map[ki]) return false;
    }
    return true;
  }

  bool run(int k) {
    if (k == src.n) {
      found.push_back(Permutation(map));
      return first_only;
    }
    for (int v = 0; v < dst.n; ++v) {
      if (used[v]) continue;
      map[k] = v;
      used[v] = 1;
      if (consistent(k) && run(k + 1)) return true;
      map[k] = -1;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<Permutation> automorphism_group(const MultiplicationTable& t) {
  IsoSearch s(t, t, false);
  s.run(0);
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

std::optional<Permutation> find_isomorphism(const MultiplicationTable& a,
                                            const MultiplicationTable& b) {
  if (a.n != b.n) return std::nullopt;
  IsoSearch s(a, b, true);
  s.run(0);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

std::vector<std::vector<int>> commuting_tuples(const std::vector<Permutation>& auts,
                                               int k, bool require_distinct) {
  int m = static_cast<int>(auts.size());
  // Precompute the commutation relation once.
  std::vector<std::vector<char>> comm(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) comm[i][j] = comm[j][i] = commute(auts[i], auts[j]) ? 1 : 0;

  std::vector<std::vector<int>> out;
  std::vector<int> tup;
  std::vector<char> taken(m, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      out.push_back(tup);
      return;
    }
    for (int i = 0; i < m; ++i) {
      if (require_distinct && taken[i]) continue;
      bool ok = true;
      for (int j : tup)
        if (!comm[j][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      tup.push_back(i);
      taken[i] = 1;
      self(self, depth + 1);
      tup.pop_back();
      taken[i] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

bool is_automorphism(const MultiplicationTable& t, const Permutation& f) {
  if (f.degree() != t.n) return false;
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      if (f(t.at(x, y)) != t.at(f(x), f(y))) return false;
  return true;
}

}  // namespace mvq
