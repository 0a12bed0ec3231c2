#include "mvq/cocycle.hpp"

#include <sstream>

namespace mvq {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names)
    : n(order), mul(std::move(table)), labels(std::move(names)) {
  if (n <= 0) throw ValidationError("group order must be positive");
  if (mul.size() != static_cast<std::size_t>(n) * n)
    throw ValidationError("group table has wrong size");
  for (int v : mul)
    if (v < 0 || v >= n) throw ValidationError("group table entry out of range");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
    throw ValidationError("group label count mismatch");

  identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (op(e, a) != a || op(a, e) != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("group table has no identity");
  inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (op(a, b) == identity && op(b, a) == identity) inverse[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse[a] < 0) throw ValidationError("group table has a non-invertible element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw ValidationError("group table is not associative");
}

std::string FiniteGroup::label(int a) const {
  if (!labels.empty()) return labels[a];
  return std::to_string(a);
}

bool is_operator_cocycle(const OperatorQuandle& oq, const CocycleTable& phi) {
  const MultiplicationTable& q = oq.quandle;
  if (phi.q_order != q.n) throw DomainError("cocycle table size does not match the quandle");
  const FiniteGroup& g = phi.group;
  for (int a = 0; a < q.n; ++a)
    if (phi.at(a, a) != g.identity) return false;
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      for (int c = 0; c < q.n; ++c) {
        int lhs = g.op(phi.at(a, b), phi.at(q.at(a, c), q.at(b, c)));
        int rhs = g.op(phi.at(a, c), phi.at(q.at(a, b), c));
        if (lhs != rhs) return false;
      }
  for (const auto& [t, f] : oq.operators)
    for (int a = 0; a < q.n; ++a)
      for (int b = 0; b < q.n; ++b)
        if (phi.at(a, b) != phi.at(f(a), f(b))) return false;
  return true;
}

std::int64_t GroupRingElement::total() const {
  std::int64_t s = 0;
  for (const auto& [g, m] : coeff) s += m;
  return s;
}

std::string to_string(const GroupRingElement& v, const FiniteGroup& g) {
  if (v.coeff.empty()) return "0";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [elem, mult] : v.coeff) {
    if (!first) out << ", ";
    first = false;
    out << (elem == g.identity ? std::string("e") : g.label(elem)) << ':' << mult;
  }
  out << '}';
  return out.str();
}

int coloring_weight(const Diagram& d, const CocycleTable& phi, const Coloring& col) {
  const FiniteGroup& g = phi.group;
  std::map<int, int> over;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i)
      if (comp[i].kind == PassageKind::Over)
        over[comp[i].crossing] = col.colors[c][(i - 1 + len) % len];
  }
  int w = g.identity;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i) {
      const Passage& p = comp[i];
      if (p.kind != PassageKind::Under) continue;
      int in = col.colors[c][(i - 1 + len) % len];
      int out = col.colors[c][i];
      int b = over.at(p.crossing);
      // Positive crossings contribute phi(under-in, over); negative ones the
      // inverse of phi(under-out, over), so that a cancelling O2a pair
      // contributes the identity.
      if (p.sign > 0)
        w = g.op(w, phi.at(in, b));
      else
        w = g.op(w, g.inverse[phi.at(out, b)]);
    }
  }
  return w;
}

GroupRingElement cocycle_invariant(const Diagram& d, const OperatorQuandle& oq,
                                   const CocycleTable& phi) {
  if (!is_operator_cocycle(oq, phi))
    throw DomainError("cocycle check failed: phi is not an operator 2-cocycle for this "
                      "operator quandle");
  GroupRingElement out;
  for (const Coloring& col : enumerate_colorings(d, oq))
    out.coeff[coloring_weight(d, phi, col)] += 1;
  return out;
}

CocycleTable parse_cocycle(const std::string& text, int q_order) {
  std::istringstream in(text);
  std::string line, tok;
  int lineno = 0;
  int gn = -1;
  std::vector<int> gtable;
  std::vector<int> phi;
  bool in_phi = false;
  std::vector<std::string> glabels;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!(ls >> tok)) continue;
    if (gn < 0) {
      if (tok != "group") throw ParseError("expected 'group <order>'", lineno);
      if (!(ls >> gn) || gn <= 0) throw ParseError("bad group order", lineno);
      continue;
    }
    if (tok == "labels") {
      std::string lab;
      while (ls >> lab) glabels.push_back(lab);
      continue;
    }
    if (tok == "phi") {
      in_phi = true;
      continue;
    }
    std::vector<int>& target = in_phi ? phi : gtable;
    try {
      target.push_back(std::stoi(tok));
    } catch (...) {
      throw ParseError("expected integer, got '" + tok + "'", lineno);
    }
    int v;
    while (ls >> v) target.push_back(v);
  }
  if (gn < 0) throw ParseError("missing 'group' line");
  if (gtable.size() != static_cast<std::size_t>(gn) * gn)
    throw ParseError("group table has wrong size");
  if (phi.size() != static_cast<std::size_t>(q_order) * q_order)
    throw ParseError("phi table has wrong size for quandle order " + std::to_string(q_order));
  for (int v : phi)
    if (v < 0 || v >= gn) throw ParseError("phi entry out of group range");
  CocycleTable t;
  t.group = FiniteGroup(gn, gtable, glabels);
  t.q_order = q_order;
  t.phi = phi;
  return t;
}

std::string serialize_cocycle(const CocycleTable& t) {
  std::ostringstream out;
  out << "group " << t.group.n << '\n';
  if (!t.group.labels.empty()) {
    out << "labels";
    for (const auto& l : t.group.labels) out << ' ' << l;
    out << '\n';
  }
  for (int a = 0; a < t.group.n; ++a) {
    for (int b = 0; b < t.group.n; ++b) out << (b ? " " : "") << t.group.op(a, b);
    out << '\n';
  }
  out << "phi\n";
  for (int a = 0; a < t.q_order; ++a) {
    for (int b = 0; b < t.q_order; ++b) out << (b ? " " : "") << t.at(a, b);
    out << '\n';
  }
  return out.str();
}

}  // namespace mvq
