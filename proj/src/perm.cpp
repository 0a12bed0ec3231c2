#include "mvq/perm.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace mvq {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= degree() || seen[v]) throw DomainError("not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (from < 0 || from >= n) throw DomainError("cycle entry out of range");
      p.img[from] = to;
    }
  }
  return Permutation(p.img);  // re-validate
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img.resize(img.size());
  for (int i = 0; i < degree(); ++i) p.img[img[i]] = i;
  return p;
}

Permutation Permutation::then(const Permutation& g) const {
  Permutation p;
  p.img.resize(img.size());
  for (int i = 0; i < degree(); ++i) p.img[i] = g.img[img[i]];
  return p;
}

std::string Permutation::cycle_string() const {
  std::vector<char> done(img.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || img[i] == i) continue;
    out << '(';
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out << ',';
      out << j;
      first = false;
      j = img[j];
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

bool commute(const Permutation& a, const Permutation& b) {
  for (int i = 0; i < a.degree(); ++i)
    if (a.img[b.img[i]] != b.img[a.img[i]]) return false;
  return true;
}

Permutation compose(const Permutation& f, const Permutation& g) { return g.then(f); }

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commute(generators[i], generators[j])) return false;
  return true;
}

PermGroup generate_group(const std::vector<Permutation>& gens, std::size_t element_budget) {
  PermGroup g;
  if (gens.empty()) throw DomainError("generate_group: no generators");
  g.degree = gens[0].degree();
  for (const auto& p : gens)
    if (p.degree() != g.degree) throw DomainError("generate_group: mixed degrees");
  g.generators = gens;

  std::set<std::vector<int>> seen;
  std::queue<Permutation> work;
  Permutation id = Permutation::identity(g.degree);
  seen.insert(id.img);
  work.push(id);
  while (!work.empty()) {
    Permutation cur = work.front();
    work.pop();
    for (const auto& gen : gens) {
      Permutation next = cur.then(gen);
      if (seen.insert(next.img).second) {
        if (seen.size() > element_budget)
          throw BudgetError("generate_group: element budget exceeded");
        work.push(next);
      }
    }
  }
  g.elements.reserve(seen.size());
  for (const auto& v : seen) g.elements.push_back(Permutation(v));
  return g;
}

PermGroup derived_subgroup(const PermGroup& g, std::size_t element_budget) {
  std::vector<Permutation> comms;
  std::set<std::vector<int>> seen;
  for (const auto& a : g.elements)
    for (const auto& b : g.elements) {
      Permutation c = a.inverse().then(b.inverse()).then(a).then(b);
      if (seen.insert(c.img).second) comms.push_back(c);
    }
  if (comms.empty()) comms.push_back(Permutation::identity(g.degree));
  return generate_group(comms, element_budget);
}

std::vector<int> orbit_of(int point, const std::vector<Permutation>& gens) {
  std::vector<int> orbit{point};
  std::set<int> seen{point};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      int nxt = g(orbit[i]);
      if (seen.insert(nxt).second) orbit.push_back(nxt);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace mvq
