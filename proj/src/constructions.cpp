#include "mvq/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mvq {

namespace {

int gcd_int(int a, int b) { return std::gcd(a, b); }

}  // namespace

QuotientRing::QuotientRing(int n, std::vector<int> f) : mod_n(n), poly(std::move(f)) {
  if (n < 2) throw DomainError("coefficient modulus must be >= 2");
  while (poly.size() > 1 && poly.back() % n == 0) poly.pop_back();
  if (poly.size() < 2) throw DomainError("modulus polynomial must have degree >= 1");
  for (int& c : poly) c = ((c % n) + n) % n;
  degree = static_cast<int>(poly.size()) - 1;
  if (gcd_int(poly.back(), n) != 1)
    throw DomainError("leading coefficient of the modulus must be a unit");
  if (gcd_int(poly[0], n) != 1)
    throw DomainError("t is not invertible: constant term of the modulus is not a unit");

  long long sz = 1;
  for (int i = 0; i < degree; ++i) {
    sz *= n;
    if (sz > 1 << 20) throw BudgetError("quotient ring too large");
  }
  size = static_cast<int>(sz);

  std::vector<int> one(degree, 0), tt(degree, 0);
  one[0] = 1;
  if (degree >= 2)
    tt[1] = 1;
  else
    tt = {};  // degree-1 quotient: t reduces to a constant
  index_of_one = index(one);
  if (degree >= 2) {
    index_of_t = index(tt);
  } else {
    // t == -poly[0]/poly[1] mod n
    int lead_inv = 0;
    for (int k = 0; k < mod_n; ++k)
      if ((poly[1] * k) % mod_n == 1 % mod_n) lead_inv = k;
    index_of_t = ((mod_n - poly[0]) * lead_inv) % mod_n;
  }
}

std::vector<int> QuotientRing::coeffs(int e) const {
  std::vector<int> c(degree);
  for (int i = 0; i < degree; ++i) {
    c[i] = e % mod_n;
    e /= mod_n;
  }
  return c;
}

int QuotientRing::index(const std::vector<int>& c) const {
  int e = 0;
  for (int i = degree - 1; i >= 0; --i) e = e * mod_n + (((c[i] % mod_n) + mod_n) % mod_n);
  return e;
}

int QuotientRing::add(int a, int b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  for (int i = 0; i < degree; ++i) ca[i] = (ca[i] + cb[i]) % mod_n;
  return index(ca);
}

int QuotientRing::sub(int a, int b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  for (int i = 0; i < degree; ++i) ca[i] = ((ca[i] - cb[i]) % mod_n + mod_n) % mod_n;
  return index(ca);
}

int QuotientRing::mul(int a, int b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  std::vector<int> prod(2 * degree - 1, 0);
  for (int i = 0; i < degree; ++i)
    for (int j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % mod_n;

  // Reduce mod f. f is unit-leading; normalize to monic once.
  int lead_inv = 0;
  for (int k = 0; k < mod_n; ++k)
    if ((poly.back() * k) % mod_n == 1 % mod_n) lead_inv = k;
  for (int d = static_cast<int>(prod.size()) - 1; d >= degree; --d) {
    int factor = (prod[d] * lead_inv) % mod_n;
    if (factor == 0) continue;
    for (int i = 0; i <= degree; ++i) {
      int idx = d - degree + i;
      prod[idx] = ((prod[idx] - factor * poly[i]) % mod_n + mod_n) % mod_n;
    }
  }
  prod.resize(degree);
  return index(prod);
}

int QuotientRing::t_inverse() const {
  for (int x = 0; x < size; ++x)
    if (mul(index_of_t, x) == index_of_one) return x;
  throw DomainError("t is not invertible in this ring");
}

std::string QuotientRing::label(int e) const {
  auto c = coeffs(e);
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < degree; ++i) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    if (i == 0)
      out << c[i];
    else {
      if (c[i] != 1) out << c[i] << '*';
      out << 't';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

MultiplicationTable dihedral_quandle(int n) {
  if (n < 1) throw DomainError("dihedral quandle needs n >= 1");
  MultiplicationTable t(n, std::vector<int>(static_cast<std::size_t>(n) * n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.at(x, y) = ((2 * y - x) % n + n) % n;
  return t;
}

MultiplicationTable alexander_quandle(const QuotientRing& ring) {
  int n = ring.size;
  int tinv = ring.t_inverse();
  (void)tinv;  // construction requirement; throws if absent
  int one_minus_t = ring.sub(ring.one(), ring.t());
  MultiplicationTable q(n, std::vector<int>(static_cast<std::size_t>(n) * n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      q.at(a, b) = ring.add(ring.mul(ring.t(), a), ring.mul(one_minus_t, b));
  q.labels.resize(n);
  for (int a = 0; a < n; ++a) q.labels[a] = ring.label(a);
  return q;
}

MultiplicationTable qme(int m, const std::vector<int>& e) {
  if (m < 1) throw DomainError("qme needs m >= 1");
  if (static_cast<int>(e.size()) != m) throw DomainError("type vector length must equal m");
  int pow2 = 1 << m;
  int n = 3 * pow2;
  int emask = 0;
  for (int i = 0; i < m; ++i)
    if (e[i] % 2) emask |= 1 << i;

  auto idx = [pow2](int i, int a) { return i * pow2 + a; };
  MultiplicationTable t(n, std::vector<int>(static_cast<std::size_t>(n) * n, 0));
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < pow2; ++a)
      for (int j = 0; j < 3; ++j)
        for (int b = 0; b < pow2; ++b) {
          int fi = ((-i - j) % 3 + 3) % 3;
          int diff = ((i - j) % 3 + 3) % 3;
          int sa;
          if (diff == 0)
            sa = a;
          else if (diff == 1)
            sa = a ^ b;
          else
            sa = a ^ b ^ emask;
          t.at(idx(i, a), idx(j, b)) = idx(fi, sa);
        }
  t.labels.resize(n);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < pow2; ++a) {
      std::string bits;
      for (int k = 0; k < m; ++k) bits += (a >> k) & 1 ? '1' : '0';
      t.labels[idx(i, a)] = "(" + std::to_string(i) + "," + bits + ")";
    }
  return t;
}

MultiplicationTable permutational_rack(const Permutation& f) {
  int n = f.degree();
  MultiplicationTable t(n, std::vector<int>(static_cast<std::size_t>(n) * n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.at(x, y) = f(x);
  return t;
}

MultiplicationTable parse_quandle_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::string> labels;
  std::vector<int> cells;
  int rows_read = 0;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;

    if (n < 0) {
      if (tok != "order") throw ParseError("expected 'order <n>'", lineno);
      if (!(ls >> n) || n <= 0) throw ParseError("bad order", lineno);
      cells.reserve(static_cast<std::size_t>(n) * n);
      continue;
    }
    if (tok == "labels") {
      std::string lab;
      while (ls >> lab) labels.push_back(lab);
      if (static_cast<int>(labels.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " labels", lineno);
      continue;
    }
    // A table row.
    if (rows_read == n) throw ParseError("extra row after table complete", lineno);
    std::vector<int> row;
    try {
      row.push_back(std::stoi(tok));
    } catch (...) {
      throw ParseError("expected integer, got '" + tok + "'", lineno);
    }
    int v;
    while (ls >> v) row.push_back(v);
    if (static_cast<int>(row.size()) != n)
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n),
                       lineno);
    for (int c : row) {
      if (c < 0 || c >= n) throw ParseError("cell value out of range", lineno);
      cells.push_back(c);
    }
    ++rows_read;
  }
  if (n < 0) throw ParseError("empty input: missing 'order' line");
  if (rows_read != n)
    throw ParseError("table has " + std::to_string(rows_read) + " rows, expected " +
                     std::to_string(n));
  return MultiplicationTable(n, std::move(cells), std::move(labels));
}

std::string serialize_quandle_table(const MultiplicationTable& t) {
  std::ostringstream out;
  out << "order " << t.n << '\n';
  if (!t.labels.empty()) {
    out << "labels";
    for (const auto& l : t.labels) out << ' ' << l;
    out << '\n';
  }
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      if (y) out << ' ';
      out << t.at(x, y);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Printed table of ConnectedQuandle(10,1).
constexpr int kCq10_1[10][10] = {
    {0, 0, 5, 9, 6, 2, 4, 0, 0, 3}, {1, 1, 6, 1, 5, 4, 2, 8, 7, 1},
    {5, 6, 2, 2, 2, 0, 1, 9, 2, 7}, {9, 3, 3, 3, 8, 7, 3, 5, 4, 0},
    {6, 5, 4, 8, 4, 1, 0, 4, 3, 4}, {2, 4, 0, 7, 1, 5, 5, 3, 5, 5},
    {4, 2, 1, 6, 0, 6, 6, 6, 9, 8}, {7, 8, 9, 5, 7, 3, 7, 7, 1, 2},
    {8, 7, 8, 4, 3, 8, 9, 1, 8, 6}, {3, 9, 7, 0, 9, 9, 8, 2, 6, 9}};

// Printed table of ConnectedQuandle(5,2), shifted from the 1-based catalog
// labels {1..5} to carriers {0..4}; labels keep the catalog names.
constexpr int kCq5_2[5][5] = {
    {0, 4, 3, 2, 1}, {2, 1, 0, 4, 3}, {4, 3, 2, 1, 0}, {1, 0, 4, 3, 2}, {3, 2, 1, 0, 4}};

// Catalog stand-ins for the order-6 and order-12 entries are produced by
// relabeling Q_m(e) with a fixed permutation, so isomorphism searches against
// the construction stay honest.
MultiplicationTable relabel(const MultiplicationTable& t, const Permutation& f) {
  MultiplicationTable out(t.n, std::vector<int>(static_cast<std::size_t>(t.n) * t.n, 0));
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) out.at(f(x), f(y)) = f(t.at(x, y));
  return out;
}

}  // namespace

MultiplicationTable connected_quandle_fixture(int n, int m) {
  if (n == 10 && m == 1) {
    std::vector<int> cells;
    for (auto& row : kCq10_1)
      for (int v : row) cells.push_back(v);
    return MultiplicationTable(10, cells);
  }
  if (n == 5 && m == 2) {
    std::vector<int> cells;
    for (auto& row : kCq5_2)
      for (int v : row) cells.push_back(v);
    MultiplicationTable t(5, cells);
    t.labels = {"1", "2", "3", "4", "5"};
    return t;
  }
  if (n == 6 && m == 1) return relabel(qme(1, {0}), Permutation({3, 0, 4, 1, 5, 2}));
  if (n == 6 && m == 2) return relabel(qme(1, {1}), Permutation({2, 5, 0, 3, 1, 4}));
  if (n == 12 && m == 8)
    return relabel(qme(2, {0, 0}), Permutation({7, 2, 9, 4, 11, 0, 5, 10, 3, 8, 1, 6}));
  throw DomainError("no fixture for ConnectedQuandle(" + std::to_string(n) + "," +
                    std::to_string(m) + ")");
}

std::vector<std::pair<int, int>> connected_quandle_fixture_names() {
  return {{5, 2}, {6, 1}, {6, 2}, {10, 1}, {12, 8}};
}

}  // namespace mvq
