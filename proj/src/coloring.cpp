#include "mvq/coloring.hpp"

#include <algorithm>

#include "mvq/aut.hpp"
#include "mvq/classify.hpp"

namespace mvq {

void OperatorQuandle::check() const {
  IdentityProfile p = classify_magma(quandle);
  if (!p.quandle) throw DomainError("operator quandle: underlying table is not a quandle");
  for (const auto& [t, f] : operators) {
    if (f.degree() != quandle.n)
      throw DomainError("operator for type '" + t + "' has wrong degree");
    if (!is_automorphism(quandle, f))
      throw DomainError("operator for type '" + t + "' is not an automorphism");
  }
  for (auto i = operators.begin(); i != operators.end(); ++i)
    for (auto j = std::next(i); j != operators.end(); ++j)
      if (!commute(i->second, j->second))
        throw DomainError("operators for types '" + i->first + "' and '" + j->first +
                          "' do not commute");
}

const Permutation& OperatorQuandle::op(const std::string& type) const {
  auto it = operators.find(type);
  if (it == operators.end()) throw DomainError("missing operator for type '" + type + "'");
  return it->second;
}

namespace {

struct ColoringSearch {
  const Diagram& d;
  const OperatorQuandle& oq;
  MultiplicationTable div;
  std::vector<std::vector<int>> colors;                // -1 = unassigned
  std::map<std::string, std::pair<Permutation, Permutation>> ops;  // type -> (op, inverse)
  // For each classical crossing id, the semiarc whose color is the over color:
  // the semiarc entering the Over passage.
  std::map<int, std::pair<int, int>> over_semiarc;
  std::uint64_t count = 0;
  std::vector<Coloring>* sink = nullptr;

  ColoringSearch(const Diagram& dia, const OperatorQuandle& q) : d(dia), oq(q), div(division_table(q.quandle)) {
    for (const auto& t : used_types()) {
      const Permutation& f = oq.op(t);
      ops.emplace(t, std::make_pair(f, f.inverse()));
    }
    colors.resize(d.components.size());
    for (std::size_t c = 0; c < d.components.size(); ++c)
      colors[c].assign(std::max<std::size_t>(d.components[c].size(), 1), -1);
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
      const auto& comp = d.components[c];
      for (int i = 0; i < static_cast<int>(comp.size()); ++i)
        if (comp[i].kind == PassageKind::Over) {
          int len = static_cast<int>(comp.size());
          over_semiarc[comp[i].crossing] = {c, (i - 1 + len) % len};
        }
    }
  }

  std::vector<std::string> used_types() const {
    std::vector<std::string> out;
    for (const auto& comp : d.components)
      for (const auto& p : comp)
        if (p.kind == PassageKind::Virtual &&
            std::find(out.begin(), out.end(), p.type) == out.end())
          out.push_back(p.type);
    return out;
  }

  int& color(std::pair<int, int> s) { return colors[s.first][s.second]; }

  void record() {
    ++count;
    if (sink) {
      Coloring col;
      col.colors = colors;
      sink->push_back(std::move(col));
    }
  }

  // Assigns v to semiarc s, or checks it when already set. Returns false on
  // conflict; pushes to undo when it assigned.
  bool set_or_check(std::pair<int, int> s, int v, std::vector<std::pair<int, int>>& undo) {
    int& slot = color(s);
    if (slot == -1) {
      slot = v;
      undo.push_back(s);
      return true;
    }
    return slot == v;
  }

  void run_component(int c) {
    if (c == static_cast<int>(d.components.size())) {
      record();
      return;
    }
    const auto& comp = d.components[c];
    if (comp.empty()) {
      // Free loop: one unconstrained semiarc.
      if (colors[c][0] != -1) {
        run_component(c + 1);
        return;
      }
      for (int v = 0; v < oq.quandle.n; ++v) {
        colors[c][0] = v;
        run_component(c + 1);
      }
      colors[c][0] = -1;
      return;
    }
    int len = static_cast<int>(comp.size());
    int seed_arc = len - 1;  // color entering passage 0
    if (colors[c][seed_arc] != -1) {
      walk(c, 0, colors[c][seed_arc]);
      return;
    }
    for (int v = 0; v < oq.quandle.n; ++v) {
      colors[c][seed_arc] = v;
      walk(c, 0, v);
      colors[c][seed_arc] = -1;
    }
  }

  // Propagate along component c from passage i with incoming color `in`.
  void walk(int c, int i, int in) {
    const auto& comp = d.components[c];
    int len = static_cast<int>(comp.size());
    if (i == len) {
      run_component(c + 1);
      return;
    }
    const Passage& p = comp[i];
    std::vector<std::pair<int, int>> undo;
    auto backtrack = [&]() {
      for (auto s : undo) color(s) = -1;
    };

    if (p.kind == PassageKind::Over) {
      if (!set_or_check({c, i}, in, undo)) {
        backtrack();
        return;
      }
      walk(c, i + 1, in);
      backtrack();
      return;
    }
    if (p.kind == PassageKind::Virtual) {
      const auto& [f, finv] = ops.at(p.type);
      int out = p.sign > 0 ? f(in) : finv(in);
      if (!set_or_check({c, i}, out, undo)) {
        backtrack();
        return;
      }
      walk(c, i + 1, out);
      backtrack();
      return;
    }
    // Under passage: needs the over color of its crossing.
    auto os = over_semiarc.at(p.crossing);
    int over = color(os);
    if (over != -1) {
      int out = p.sign > 0 ? oq.quandle.at(in, over) : div.at(in, over);
      if (!set_or_check({c, i}, out, undo)) {
        backtrack();
        return;
      }
      walk(c, i + 1, out);
      backtrack();
      return;
    }
    // Over strand not reached yet: branch on its color.
    for (int b = 0; b < oq.quandle.n; ++b) {
      std::vector<std::pair<int, int>> undo2;
      if (!set_or_check(os, b, undo2)) {
        for (auto s : undo2) color(s) = -1;
        continue;
      }
      int out = p.sign > 0 ? oq.quandle.at(in, b) : div.at(in, b);
      if (set_or_check({c, i}, out, undo2)) walk(c, i + 1, out);
      for (auto s : undo2) color(s) = -1;
    }
  }
};

void require_operators(const Diagram& d, const OperatorQuandle& oq) {
  for (const auto& comp : d.components)
    for (const auto& p : comp)
      if (p.kind == PassageKind::Virtual) oq.op(p.type);
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram& d, const OperatorQuandle& oq) {
  require_operators(d, oq);
  ColoringSearch s(d, oq);
  std::vector<Coloring> out;
  s.sink = &out;
  s.run_component(0);
  return out;
}

std::uint64_t count_colorings(const Diagram& d, const OperatorQuandle& oq) {
  require_operators(d, oq);
  ColoringSearch s(d, oq);
  s.run_component(0);
  return s.count;
}

bool is_valid_coloring(const Diagram& d, const OperatorQuandle& oq, const Coloring& col) {
  MultiplicationTable div = division_table(oq.quandle);
  // Over colors, read off the assignment.
  std::map<int, int> over;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i)
      if (comp[i].kind == PassageKind::Over)
        over[comp[i].crossing] = col.colors[c][(i - 1 + len) % len];
  }
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const auto& comp = d.components[c];
    int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i) {
      int in = col.colors[c][(i - 1 + len) % len];
      int out = col.colors[c][i];
      const Passage& p = comp[i];
      if (p.kind == PassageKind::Over) {
        if (out != in) return false;
      } else if (p.kind == PassageKind::Virtual) {
        const Permutation& f = oq.op(p.type);
        if (out != (p.sign > 0 ? f(in) : f.inverse()(in))) return false;
      } else {
        int b = over.at(p.crossing);
        if (out != (p.sign > 0 ? oq.quandle.at(in, b) : div.at(in, b))) return false;
      }
    }
  }
  return true;
}

std::uint64_t coloring_oracle(const Diagram& d, const OperatorQuandle& oq,
                              std::uint64_t budget) {
  require_operators(d, oq);
  int semiarcs = d.semiarc_count();
  std::uint64_t total = 1;
  for (int i = 0; i < semiarcs; ++i) {
    total *= static_cast<std::uint64_t>(oq.quandle.n);
    if (total > budget) throw BudgetError("coloring_oracle: assignment space exceeds budget");
  }

  Coloring col;
  col.colors.resize(d.components.size());
  for (std::size_t c = 0; c < d.components.size(); ++c)
    col.colors[c].assign(std::max<std::size_t>(d.components[c].size(), 1), 0);

  std::uint64_t hits = 0;
  while (true) {
    if (is_valid_coloring(d, oq, col)) ++hits;
    // Odometer.
    std::size_t c = 0, i = 0;
    bool done = true;
    for (c = 0; c < col.colors.size(); ++c) {
      for (i = 0; i < col.colors[c].size(); ++i) {
        if (col.colors[c][i] + 1 < oq.quandle.n) {
          ++col.colors[c][i];
          done = false;
          goto advanced;
        }
        col.colors[c][i] = 0;
      }
    }
  advanced:
    if (done) break;
  }
  return hits;
}

}  // namespace mvq
