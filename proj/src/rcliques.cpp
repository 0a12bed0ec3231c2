#include "mvq/rcliques.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mvq/classify.hpp"

namespace mvq {

bool r_commutes(const MultiplicationTable& t, int a, int b) {
  return commute(right_translation(t, a), right_translation(t, b));
}

bool is_r_clique(const MultiplicationTable& t, const std::vector<int>& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (!r_commutes(t, subset[i], subset[j])) return false;
  return true;
}

std::vector<int> subrack_closure(const MultiplicationTable& t, std::vector<int> subset) {
  MultiplicationTable div = division_table(t);
  std::set<int> closed(subset.begin(), subset.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closed.begin(), closed.end());
    for (int a : cur)
      for (int b : cur) {
        if (closed.insert(t.at(a, b)).second) grew = true;
        if (closed.insert(div.at(a, b)).second) grew = true;
      }
  }
  return std::vector<int>(closed.begin(), closed.end());
}

namespace {

// Bron-Kerbosch with pivoting on the commutation graph.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p)
    if (static_cast<int>(std::count_if(p.begin(), p.end(),
                                       [&](int v) { return adj[u][v]; })) > best) {
      best = static_cast<int>(std::count_if(p.begin(), p.end(),
                                            [&](int v) { return adj[u][v]; }));
      pivot = u;
    }
  for (int u : x) {
    int c = static_cast<int>(std::count_if(p.begin(), p.end(),
                                           [&](int v) { return adj[u][v]; }));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  std::vector<int> candidates;
  for (int v : p)
    if (pivot < 0 || !adj[pivot][v]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int w : p)
      if (adj[v][w]) np.push_back(w);
    for (int w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

RCliqueReport maximal_r_cliques(const MultiplicationTable& t) {
  if (!is_right_quasigroup(t)) throw DomainError("maximal_r_cliques: not a right quasigroup");
  auto rs = right_translations(t);
  std::vector<std::vector<char>> adj(t.n, std::vector<char>(t.n, 0));
  for (int a = 0; a < t.n; ++a)
    for (int b = a + 1; b < t.n; ++b) adj[a][b] = adj[b][a] = commute(rs[a], rs[b]) ? 1 : 0;

  std::vector<int> r, p(t.n), x;
  for (int i = 0; i < t.n; ++i) p[i] = i;
  std::vector<std::vector<int>> cliques;
  bron_kerbosch(adj, r, p, x, cliques);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());

  auto kernel = cayley_kernel(t);
  RCliqueReport report;
  for (auto& c : cliques) {
    RCliqueReport::Entry e;
    e.members = c;
    std::set<int> cs(c.begin(), c.end());
    auto closure = subrack_closure(t, c);
    e.subrack_closed = std::set<int>(closure.begin(), closure.end()) == cs;
    e.kernel_class_union = true;
    for (const auto& cls : kernel) {
      bool any = false, all = true;
      for (int m : cls) {
        if (cs.count(m))
          any = true;
        else
          all = false;
      }
      if (any && !all) e.kernel_class_union = false;
    }
    report.cliques.push_back(std::move(e));
  }
  return report;
}

std::string serialize_report(const RCliqueReport& report, const MultiplicationTable& t) {
  std::ostringstream out;
  for (const auto& e : report.cliques) {
    out << '{';
    for (std::size_t i = 0; i < e.members.size(); ++i) {
      if (i) out << ' ';
      out << t.label(e.members[i]);
    }
    out << '}';
    out << " maximal=1";
    out << " subrack=" << (e.subrack_closed ? 1 : 0);
    out << " kernel_union=" << (e.kernel_class_union ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

}  // namespace mvq
