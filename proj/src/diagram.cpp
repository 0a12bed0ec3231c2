#include "mvq/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mvq {

int Diagram::semiarc_count() const {
  int n = 0;
  for (const auto& c : components) n += c.empty() ? 1 : static_cast<int>(c.size());
  return n;
}

int Diagram::classical_crossings() const {
  std::set<int> ids;
  for (const auto& c : components)
    for (const auto& p : c)
      if (p.kind != PassageKind::Virtual) ids.insert(p.crossing);
  return static_cast<int>(ids.size());
}

int Diagram::virtual_crossings() const {
  std::set<int> ids;
  for (const auto& c : components)
    for (const auto& p : c)
      if (p.kind == PassageKind::Virtual) ids.insert(p.crossing);
  return static_cast<int>(ids.size());
}

void validate(const Diagram& d) {
  if (d.components.empty()) throw ValidationError("diagram has no components");
  std::set<std::string> declared(d.types.begin(), d.types.end());
  std::map<int, std::vector<const Passage*>> by_id;
  for (const auto& comp : d.components)
    for (const auto& p : comp) {
      if (p.sign != +1 && p.sign != -1) throw ValidationError("passage sign must be +1 or -1");
      if (p.kind == PassageKind::Virtual) {
        if (p.type.empty()) throw ValidationError("virtual passage without a type");
        if (!declared.count(p.type))
          throw ValidationError("type '" + p.type + "' not in the declared alphabet");
      } else if (!p.type.empty()) {
        throw ValidationError("classical passage carries a type label");
      }
      by_id[p.crossing].push_back(&p);
    }
  for (const auto& [id, ps] : by_id) {
    if (ps.size() != 2)
      throw ValidationError("crossing " + std::to_string(id) + " appears " +
                            std::to_string(ps.size()) + " times, expected 2");
    const Passage *a = ps[0], *b = ps[1];
    if ((a->kind == PassageKind::Virtual) != (b->kind == PassageKind::Virtual))
      throw ValidationError("crossing " + std::to_string(id) + " mixes virtual and classical");
    if (a->kind == PassageKind::Virtual) {
      if (a->type != b->type)
        throw ValidationError("virtual crossing " + std::to_string(id) +
                              " has mismatched types");
      if (a->sign == b->sign)
        throw ValidationError("virtual crossing " + std::to_string(id) +
                              " must have opposite chirality at its two passages");
    } else {
      if (a->kind == b->kind)
        throw ValidationError("classical crossing " + std::to_string(id) +
                              " must have one over and one under passage");
      if (a->sign != b->sign)
        throw ValidationError("classical crossing " + std::to_string(id) +
                              " has mismatched signs");
    }
  }
}

namespace {

Passage parse_symbol(const std::string& tok, int lineno) {
  Passage p;
  if (tok.empty()) throw ParseError("empty symbol", lineno);
  std::size_t i = 0;
  if (tok[0] == 'O' || tok[0] == 'U') {
    p.kind = tok[0] == 'O' ? PassageKind::Over : PassageKind::Under;
    i = 1;
  } else if (tok[0] == 'V') {
    p.kind = PassageKind::Virtual;
    i = 1;
    std::size_t j = i;
    while (j < tok.size() && tok[j] != '+' && tok[j] != '-') ++j;
    if (j == i) throw ParseError("virtual symbol '" + tok + "' is missing its type", lineno);
    p.type = tok.substr(i, j - i);
    i = j;
  } else {
    throw ParseError("unknown symbol '" + tok + "'", lineno);
  }
  if (i >= tok.size() || (tok[i] != '+' && tok[i] != '-'))
    throw ParseError("symbol '" + tok + "' is missing its sign", lineno);
  p.sign = tok[i] == '+' ? +1 : -1;
  ++i;
  if (i >= tok.size()) throw ParseError("symbol '" + tok + "' is missing its id", lineno);
  try {
    std::size_t used = 0;
    p.crossing = std::stoi(tok.substr(i), &used);
    if (used != tok.size() - i) throw std::invalid_argument("");
  } catch (...) {
    throw ParseError("bad crossing id in '" + tok + "'", lineno);
  }
  return p;
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  Diagram d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_types = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "types:") {
      if (saw_types) throw ParseError("duplicate types line", lineno);
      saw_types = true;
      std::string t;
      while (ls >> t) d.types.push_back(t);
      continue;
    }
    if (tok == "component:") {
      std::vector<Passage> comp;
      std::string sym;
      while (ls >> sym) comp.push_back(parse_symbol(sym, lineno));
      d.components.push_back(std::move(comp));
      continue;
    }
    throw ParseError("expected 'types:' or 'component:', got '" + tok + "'", lineno);
  }
  for (const auto& comp : d.components)
    for (const auto& p : comp) d.next_id = std::max(d.next_id, p.crossing + 1);
  validate(d);
  return d;
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "types:";
  for (const auto& t : d.types) out << ' ' << t;
  out << '\n';
  for (const auto& comp : d.components) {
    out << "component:";
    for (const auto& p : comp) {
      out << ' ';
      if (p.kind == PassageKind::Virtual)
        out << 'V' << p.type;
      else
        out << (p.kind == PassageKind::Over ? 'O' : 'U');
      out << (p.sign > 0 ? '+' : '-') << p.crossing;
    }
    out << '\n';
  }
  return out.str();
}

Diagram virtual_projection(const Diagram& d) {
  bool any = false;
  for (const auto& comp : d.components)
    for (const auto& p : comp)
      if (p.kind == PassageKind::Virtual) any = true;
  if (!any) return d;
  Diagram out = d;
  out.types = {"v"};
  for (auto& comp : out.components)
    for (auto& p : comp)
      if (p.kind == PassageKind::Virtual) p.type = "v";
  return out;
}

Diagram retype(const Diagram& d, const std::map<std::string, std::string>& f) {
  std::set<std::string> in_use;
  for (const auto& comp : d.components)
    for (const auto& p : comp)
      if (p.kind == PassageKind::Virtual) in_use.insert(p.type);
  std::map<std::string, std::string> applied;
  std::set<std::string> images;
  for (const auto& t : in_use) {
    auto it = f.find(t);
    std::string img = it == f.end() ? t : it->second;
    applied[t] = img;
    if (!images.insert(img).second)
      throw ValidationError("retyping is not injective on the labels in use");
  }
  Diagram out = d;
  std::vector<std::string> new_types;
  std::set<std::string> seen;
  for (const auto& t : d.types) {
    auto it = f.find(t);
    std::string img = it == f.end() ? t : it->second;
    if (seen.insert(img).second) new_types.push_back(img);
  }
  out.types = new_types;
  for (auto& comp : out.components)
    for (auto& p : comp)
      if (p.kind == PassageKind::Virtual) p.type = applied[p.type];
  return out;
}

std::vector<std::vector<int>> enumerate_typings(int k) {
  if (k < 0) throw DomainError("enumerate_typings: k must be >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> a;
  auto rec = [&](auto&& self, int maxv) -> void {
    if (static_cast<int>(a.size()) == k) {
      out.push_back(a);
      return;
    }
    for (int v = 1; v <= maxv + 1; ++v) {
      a.push_back(v);
      self(self, std::max(maxv, v));
      a.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t bell_number(int k) {
  if (k < 0 || k > 24) throw DomainError("bell_number supports 0 <= k <= 24");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  std::uint64_t bell = 1;
  for (int i = 1; i <= k; ++i) {
    std::vector<std::uint64_t> next(i + 1);
    next[0] = row.back();
    for (int j = 0; j < i; ++j) next[j + 1] = next[j] + row[j];
    row = std::move(next);
    bell = row[0];
  }
  return bell;
}

std::vector<std::vector<int>> typing_schemes_for_pairs(int k) {
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  for (const auto& rgs : enumerate_typings(2 * k)) {
    std::vector<int> tail(rgs.begin() + k, rgs.end());
    if (seen.insert(tail).second) out.push_back(tail);
  }
  return out;
}

}  // namespace mvq
