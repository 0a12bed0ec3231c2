#include "mvq/bracket.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace mvq {

LaurentPolynomial LaurentPolynomial::term(std::int64_t coeff, int exp) {
  LaurentPolynomial p;
  if (coeff != 0) p.c[exp] = coeff;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, k] : o.c) {
    auto it = c.find(e);
    if (it == c.end()) {
      if (k != 0) c[e] = k;
    } else {
      it->second += k;
      if (it->second == 0) c.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  r += o.scaled(-1);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [e1, k1] : c)
    for (const auto& [e2, k2] : o.c) r += term(k1 * k2, e1 + e2);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(std::int64_t k) const {
  LaurentPolynomial r;
  if (k == 0) return r;
  for (const auto& [e, v] : c) r.c[e] = v * k;
  return r;
}

int LaurentPolynomial::max_exponent() const {
  if (c.empty()) throw DomainError("zero polynomial has no leading exponent");
  return c.rbegin()->first;
}

LaurentPolynomial loop_value() {
  LaurentPolynomial d;
  d.c[2] = -1;
  d.c[-2] = -1;
  return d;
}

LaurentPolynomial loop_value_pow(int k) {
  LaurentPolynomial r = LaurentPolynomial::term(1, 0);
  for (int i = 0; i < k; ++i) r = r * loop_value();
  return r;
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    int e = it->first;
    std::int64_t k = it->second;
    if (first) {
      if (k < 0) out << '-';
    } else {
      out << (k < 0 ? " - " : " + ");
    }
    std::int64_t a = k < 0 ? -k : k;
    if (a != 1 || e == 0) {
      out << a;
      if (e != 0) out << '*';
    }
    if (e != 0) {
      out << 'A';
      if (e != 1) out << '^' << e;
    }
    first = false;
  }
  return out.str();
}

PortDiagram to_port_diagram(const Diagram& d, const std::map<std::string, VertexKind>& label_map) {
  // Resolve the label mapping.
  std::set<std::string> used;
  for (const auto& comp : d.components)
    for (const auto& p : comp)
      if (p.kind == PassageKind::Virtual) used.insert(p.type);

  std::map<std::string, VertexKind> resolved = label_map;
  std::vector<std::string> unmapped;
  for (const auto& t : d.types) {
    if (!used.count(t) || resolved.count(t)) continue;
    if (t == "node")
      resolved[t] = VertexKind::Node;
    else if (t == "box")
      resolved[t] = VertexKind::Box;
    else if (t == "circle")
      resolved[t] = VertexKind::Circle;
    else
      unmapped.push_back(t);
  }
  if (unmapped.size() == 1)
    resolved[unmapped[0]] = VertexKind::Box;
  else if (unmapped.size() == 2) {
    resolved[unmapped[0]] = VertexKind::Box;
    resolved[unmapped[1]] = VertexKind::Circle;
  } else if (unmapped.size() > 2) {
    throw DomainError("the bracket supports at most two virtual types (got " +
                      std::to_string(unmapped.size()) + " unassigned)");
  }
  for (const auto& t : used)
    if (!resolved.count(t)) throw DomainError("no box/circle assignment for type '" + t + "'");

  // Number semiarcs globally.
  PortDiagram pd;
  std::vector<int> base(d.components.size(), 0);
  int next = 0;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    base[c] = next;
    next += std::max<int>(static_cast<int>(d.components[c].size()), 1);
    if (d.components[c].empty()) ++pd.free_loops;
  }
  pd.semiarcs = next;

  // Gather the two passages of each crossing with their in/out semiarcs.
  struct End {
    const Passage* p;
    int in, out;
  };
  std::map<int, std::vector<End>> ends;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& comp = d.components[c];
    int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i) {
      End e{&comp[i], base[c] + (i - 1 + len) % len, base[c] + i};
      ends[comp[i].crossing].push_back(e);
    }
  }
  for (const auto& [id, es] : ends) {
    if (es.size() != 2) throw ValidationError("crossing does not appear exactly twice");
    PortDiagram::Vertex v;
    const Passage& p1 = *es[0].p;
    if (p1.kind == PassageKind::Virtual) {
      v.kind = resolved.at(p1.type);
      v.port[0] = es[0].in;
      v.port[1] = es[0].out;
      v.port[2] = es[1].in;
      v.port[3] = es[1].out;
    } else {
      v.kind = VertexKind::Classical;
      v.sign = p1.sign;
      const End& over = p1.kind == PassageKind::Over ? es[0] : es[1];
      const End& under = p1.kind == PassageKind::Over ? es[1] : es[0];
      v.port[0] = over.in;
      v.port[1] = over.out;
      v.port[2] = under.in;
      v.port[3] = under.out;
    }
    pd.vertices.push_back(v);
  }
  return pd;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Component count of a flat state where every classical vertex has been
// resolved into one of its two port pairings. pairing[vi] is 0 for the
// A-smoothing, 1 for B, -1 for non-classical vertices.
int state_components(const PortDiagram& pd, const std::vector<int>& pairing) {
  UnionFind uf(pd.semiarcs);
  std::vector<char> active(pd.semiarcs, 0);
  for (std::size_t vi = 0; vi < pd.vertices.size(); ++vi) {
    const auto& v = pd.vertices[vi];
    for (int k = 0; k < 4; ++k) active[v.port[k]] = 1;
    switch (v.kind) {
      case VertexKind::Circle:
        uf.unite(v.port[0], v.port[1]);
        uf.unite(v.port[2], v.port[3]);
        break;
      case VertexKind::Node:
        uf.unite(v.port[0], v.port[1]);
        uf.unite(v.port[1], v.port[2]);
        uf.unite(v.port[2], v.port[3]);
        break;
      case VertexKind::Classical: {
        // Ports: 0 over-in, 1 over-out, 2 under-in, 3 under-out.
        // Positive crossing: A joins over-in/under-out and over-out/under-in;
        // B joins over-in/under-in and over-out/under-out. Negative crossing:
        // the other way round. Certified by the kink value -A^3 d and O2a
        // invariance.
        bool a_smoothing = pairing[vi] == 0;
        bool join_in_out = (v.sign > 0) == a_smoothing;
        if (join_in_out) {
          uf.unite(v.port[0], v.port[3]);
          uf.unite(v.port[1], v.port[2]);
        } else {
          uf.unite(v.port[0], v.port[2]);
          uf.unite(v.port[1], v.port[3]);
        }
        break;
      }
      case VertexKind::Box:
        throw DomainError("flat state still contains a box vertex");
    }
  }
  // Each semiarc is one union-find node; vertices join the semiarcs at their
  // ports. Semiarcs touching no vertex belong to free loops, counted apart.
  std::set<int> roots;
  for (int s = 0; s < pd.semiarcs; ++s)
    if (active[s]) roots.insert(uf.find(s));
  return static_cast<int>(roots.size()) + pd.free_loops;
}

}  // namespace

int flat_components(const PortDiagram& pd) {
  for (const auto& v : pd.vertices)
    if (v.kind == VertexKind::Classical || v.kind == VertexKind::Box)
      throw DomainError("flat_components: diagram is not flat");
  return state_components(pd, std::vector<int>(pd.vertices.size(), -1));
}

LaurentPolynomial flat_value(const PortDiagram& pd) {
  return loop_value_pow(flat_components(pd));
}

LaurentPolynomial chromatic_bracket(const Diagram& d,
                                    const std::map<std::string, VertexKind>& label_map,
                                    std::uint64_t state_budget) {
  PortDiagram pd = to_port_diagram(d, label_map);

  std::vector<int> expandable;  // indices of classical and box vertices
  for (std::size_t vi = 0; vi < pd.vertices.size(); ++vi)
    if (pd.vertices[vi].kind == VertexKind::Classical ||
        pd.vertices[vi].kind == VertexKind::Box)
      expandable.push_back(static_cast<int>(vi));
  if (expandable.size() < 64 && (1ull << expandable.size()) > state_budget)
    throw BudgetError("chromatic_bracket: state budget exceeded");
  if (expandable.size() >= 64) throw BudgetError("chromatic_bracket: state budget exceeded");

  // Expand depth-first; each classical vertex contributes A / A^-1 on its two
  // smoothings, each box 2 (node) and -1 (circle).
  LaurentPolynomial total;
  std::vector<int> pairing(pd.vertices.size(), -1);
  auto rec = [&](auto&& self, std::size_t k, LaurentPolynomial factor) -> void {
    if (k == expandable.size()) {
      total += factor * loop_value_pow(state_components(pd, pairing));
      return;
    }
    int vi = expandable[k];
    auto& v = pd.vertices[vi];
    if (v.kind == VertexKind::Classical) {
      pairing[vi] = 0;
      self(self, k + 1, factor * LaurentPolynomial::term(1, 1));
      pairing[vi] = 1;
      self(self, k + 1, factor * LaurentPolynomial::term(1, -1));
      pairing[vi] = -1;
    } else {
      v.kind = VertexKind::Node;
      self(self, k + 1, factor.scaled(2));
      v.kind = VertexKind::Circle;
      self(self, k + 1, factor.scaled(-1));
      v.kind = VertexKind::Box;
    }
  };
  rec(rec, 0, LaurentPolynomial::term(1, 0));
  return total;
}

}  // namespace mvq
