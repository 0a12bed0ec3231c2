#include "mvq/moves.hpp"

#include <algorithm>
#include <array>

namespace mvq {

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::O1a: return "O1a";
    case MoveKind::O1b: return "O1b";
    case MoveKind::O2a: return "O2a";
    case MoveKind::O3a: return "O3a";
    case MoveKind::V1a: return "v1a";
    case MoveKind::V1b: return "v1b";
    case MoveKind::V2a: return "v2a";
    case MoveKind::CV3a: return "cv3a";
    case MoveKind::MV3a: return "mv3a";
  }
  return "?";
}

namespace {

using Pos = std::pair<int, int>;

const Passage& at(const Diagram& d, Pos p) { return d.components[p.first][p.second]; }

int comp_size(const Diagram& d, int c) { return static_cast<int>(d.components[c].size()); }

Pos next_pos(const Diagram& d, Pos p) {
  return {p.first, (p.second + 1) % comp_size(d, p.first)};
}

bool classical(const Passage& p, PassageKind kind, int sign) {
  return p.kind == kind && p.sign == sign;
}

bool virt(const Passage& p, int chir) { return p.kind == PassageKind::Virtual && p.sign == chir; }

// All semiarc positions (insertion targets).
std::vector<Pos> all_gaps(const Diagram& d) {
  std::vector<Pos> out;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    int n = std::max(comp_size(d, c), 1);
    for (int i = 0; i < n; ++i) out.push_back({c, i});
  }
  return out;
}

// All adjacent passage pairs, as the left position.
std::vector<Pos> all_pairs(const Diagram& d) {
  std::vector<Pos> out;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    int n = comp_size(d, c);
    if (n < 2) continue;
    for (int i = 0; i < n; ++i) out.push_back({c, i});
  }
  return out;
}

bool pairs_disjoint(const Diagram& d, Pos a, Pos b) {
  if (a.first != b.first) return true;
  int n = comp_size(d, a.first);
  int i = a.second, j = b.second;
  return j != i && j != (i + 1) % n && (j + 1) % n != i;
}

// Insert the given passages after semiarc position (c, s); for an empty
// component they become the whole code.
void insert_after(Diagram& d, Pos gap, const std::vector<Passage>& ps) {
  auto& comp = d.components[gap.first];
  auto it = comp.empty() ? comp.begin() : comp.begin() + gap.second + 1;
  comp.insert(it, ps.begin(), ps.end());
}

void erase_positions(Diagram& d, std::vector<Pos> positions) {
  std::sort(positions.begin(), positions.end(), [](Pos a, Pos b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  for (Pos p : positions) d.components[p.first].erase(d.components[p.first].begin() + p.second);
}

void swap_adjacent_pair(Diagram& d, Pos p) {
  int n = comp_size(d, p.first);
  std::swap(d.components[p.first][p.second], d.components[p.first][(p.second + 1) % n]);
}

struct PairPattern {
  // Kinds/signs for the two passages of a deletable pair; crossing ids must
  // match and types must match for virtual pairs.
  PassageKind k1, k2;
  int s1, s2;
};

// Deletion sites for a kink pattern: adjacent passages of one crossing.
std::vector<MoveSite> kink_delete_sites(const Diagram& d, MoveKind kind, PairPattern pat) {
  std::vector<MoveSite> out;
  for (Pos p : all_pairs(d)) {
    const Passage &a = at(d, p), &b = at(d, next_pos(d, p));
    if (a.crossing != b.crossing) continue;
    if (a.kind != pat.k1 || b.kind != pat.k2) continue;
    if (a.sign != pat.s1 || b.sign != pat.s2) continue;
    MoveSite s;
    s.kind = kind;
    s.forward = false;
    s.pos = {p};
    if (a.kind == PassageKind::Virtual) s.type = a.type;
    out.push_back(s);
  }
  return out;
}

std::vector<MoveSite> insert_sites(const Diagram& d, MoveKind kind, bool virt_move) {
  std::vector<MoveSite> out;
  std::vector<std::string> types = virt_move ? d.types : std::vector<std::string>{""};
  if (virt_move && types.empty()) return out;
  for (const auto& t : types)
    for (Pos g : all_gaps(d)) {
      MoveSite s;
      s.kind = kind;
      s.forward = true;
      s.pos = {g};
      s.type = t;
      out.push_back(s);
    }
  return out;
}

std::vector<MoveSite> insert_pair_sites(const Diagram& d, MoveKind kind, bool virt_move) {
  std::vector<MoveSite> out;
  std::vector<std::string> types = virt_move ? d.types : std::vector<std::string>{""};
  if (virt_move && types.empty()) return out;
  auto gaps = all_gaps(d);
  for (const auto& t : types)
    for (Pos g1 : gaps)
      for (Pos g2 : gaps) {
        MoveSite s;
        s.kind = kind;
        s.forward = true;
        s.pos = {g1, g2};
        s.type = t;
        out.push_back(s);
      }
  return out;
}

// Triangle patterns. Each row describes one strand's adjacent pair on the
// left-hand side of the move; the right-hand side is the same with each pair
// swapped. Crossing roles: x = the crossing between strands A and C, p =
// between A and B, q = between C and B.
struct TrianglePattern {
  // predicate per passage: returns role id 0..5 match
  // A: [a1 a2], C: [c1 c2], B: [b1 b2]
  // encoded below directly in the matcher.
  MoveKind kind;
};

// Matches the six-passage triangle of `kind` at pair positions (pa, pc, pb),
// on the side given by `forward` (true = left-hand pattern). Checks kinds,
// signs, chirality, crossing sharing, and type agreement.
bool match_triangle(const Diagram& d, MoveKind kind, Pos pa, Pos pc, Pos pb, bool left) {
  const Passage &a1 = at(d, pa), &a2 = at(d, next_pos(d, pa));
  const Passage &c1 = at(d, pc), &c2 = at(d, next_pos(d, pc));
  const Passage &b1 = at(d, pb), &b2 = at(d, next_pos(d, pb));

  // Right-hand side is the left-hand side with every pair swapped.
  const Passage &A1 = left ? a1 : a2, &A2 = left ? a2 : a1;
  const Passage &C1 = left ? c1 : c2, &C2 = left ? c2 : c1;
  const Passage &B1 = left ? b1 : b2, &B2 = left ? b2 : b1;

  switch (kind) {
    case MoveKind::O3a:
      // A: [O-x, O+p]  C: [O+q, U-x]  B: [U+p, U+q]
      if (!classical(A1, PassageKind::Over, -1) || !classical(A2, PassageKind::Over, +1))
        return false;
      if (!classical(C1, PassageKind::Over, +1) || !classical(C2, PassageKind::Under, -1))
        return false;
      if (!classical(B1, PassageKind::Under, +1) || !classical(B2, PassageKind::Under, +1))
        return false;
      return A1.crossing == C2.crossing && A2.crossing == B1.crossing &&
             C1.crossing == B2.crossing;
    case MoveKind::CV3a:
      // A: [O-x, V-p]  C: [V+q, U-x]  B: [V+p, V-q], all virtuals one type
      if (!classical(A1, PassageKind::Over, -1) || !virt(A2, -1)) return false;
      if (!virt(C1, +1) || !classical(C2, PassageKind::Under, -1)) return false;
      if (!virt(B1, +1) || !virt(B2, -1)) return false;
      if (!(A2.type == C1.type && C1.type == B1.type && B1.type == B2.type)) return false;
      return A1.crossing == C2.crossing && A2.crossing == B1.crossing &&
             C1.crossing == B2.crossing;
    case MoveKind::MV3a:
      // A: [V+x, V-p]  C: [V+q, V-x]  B: [V+p, V-q]; x of one type, p/q of
      // another (possibly equal) type
      if (!virt(A1, +1) || !virt(A2, -1)) return false;
      if (!virt(C1, +1) || !virt(C2, -1)) return false;
      if (!virt(B1, +1) || !virt(B2, -1)) return false;
      if (A1.crossing != C2.crossing || A2.crossing != B1.crossing ||
          C1.crossing != B2.crossing)
        return false;
      if (A1.type != C2.type) return false;
      return A2.type == C1.type && C1.type == B1.type && B1.type == B2.type;
    default:
      return false;
  }
}

std::vector<MoveSite> triangle_sites(const Diagram& d, MoveKind kind) {
  std::vector<MoveSite> out;
  auto pairs = all_pairs(d);
  for (Pos pa : pairs)
    for (Pos pc : pairs) {
      if (!pairs_disjoint(d, pa, pc)) continue;
      for (Pos pb : pairs) {
        if (!pairs_disjoint(d, pa, pb) || !pairs_disjoint(d, pc, pb)) continue;
        for (bool left : {true, false}) {
          if (match_triangle(d, kind, pa, pc, pb, left)) {
            MoveSite s;
            s.kind = kind;
            s.forward = left;
            s.pos = {pa, pc, pb};
            out.push_back(s);
          }
        }
      }
    }
  return out;
}

}  // namespace

std::vector<MoveSite> enumerate_move_sites(const Diagram& d, MoveKind kind) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::O1a: {
      out = insert_sites(d, kind, false);
      auto del = kink_delete_sites(d, kind, {PassageKind::Over, PassageKind::Under, +1, +1});
      out.insert(out.end(), del.begin(), del.end());
      break;
    }
    case MoveKind::O1b: {
      out = insert_sites(d, kind, false);
      auto del = kink_delete_sites(d, kind, {PassageKind::Under, PassageKind::Over, -1, -1});
      out.insert(out.end(), del.begin(), del.end());
      break;
    }
    case MoveKind::V1a: {
      out = insert_sites(d, kind, true);
      auto del =
          kink_delete_sites(d, kind, {PassageKind::Virtual, PassageKind::Virtual, -1, +1});
      out.insert(out.end(), del.begin(), del.end());
      break;
    }
    case MoveKind::V1b: {
      out = insert_sites(d, kind, true);
      auto del =
          kink_delete_sites(d, kind, {PassageKind::Virtual, PassageKind::Virtual, +1, -1});
      out.insert(out.end(), del.begin(), del.end());
      break;
    }
    case MoveKind::O2a: {
      out = insert_pair_sites(d, kind, false);
      // deletions: A pair [O+x, O-y] with matching B pair [U+x, U-y]
      for (Pos pa : all_pairs(d)) {
        const Passage &a1 = at(d, pa), &a2 = at(d, next_pos(d, pa));
        if (!classical(a1, PassageKind::Over, +1) || !classical(a2, PassageKind::Over, -1))
          continue;
        if (a1.crossing == a2.crossing) continue;
        for (Pos pb : all_pairs(d)) {
          if (!pairs_disjoint(d, pa, pb)) continue;
          const Passage &b1 = at(d, pb), &b2 = at(d, next_pos(d, pb));
          if (!classical(b1, PassageKind::Under, +1) || !classical(b2, PassageKind::Under, -1))
            continue;
          if (b1.crossing != a1.crossing || b2.crossing != a2.crossing) continue;
          MoveSite s;
          s.kind = kind;
          s.forward = false;
          s.pos = {pa, pb};
          out.push_back(s);
        }
      }
      break;
    }
    case MoveKind::V2a: {
      out = insert_pair_sites(d, kind, true);
      for (Pos pa : all_pairs(d)) {
        const Passage &a1 = at(d, pa), &a2 = at(d, next_pos(d, pa));
        if (!virt(a1, -1) || !virt(a2, +1)) continue;
        if (a1.crossing == a2.crossing || a1.type != a2.type) continue;
        for (Pos pb : all_pairs(d)) {
          if (!pairs_disjoint(d, pa, pb)) continue;
          const Passage &b1 = at(d, pb), &b2 = at(d, next_pos(d, pb));
          if (!virt(b1, +1) || !virt(b2, -1)) continue;
          if (b1.crossing != a1.crossing || b2.crossing != a2.crossing) continue;
          MoveSite s;
          s.kind = kind;
          s.forward = false;
          s.pos = {pa, pb};
          s.type = a1.type;
          out.push_back(s);
        }
      }
      break;
    }
    case MoveKind::O3a:
    case MoveKind::CV3a:
    case MoveKind::MV3a:
      out = triangle_sites(d, kind);
      break;
  }
  return out;
}

Diagram apply_move(const Diagram& d, const MoveSite& site) {
  Diagram out = d;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) throw ValidationError(std::string("invalid site for ") + move_name(site.kind) +
                                     ": " + what);
  };

  auto check_gap = [&](Pos g) {
    expect(g.first >= 0 && g.first < static_cast<int>(out.components.size()), "bad component");
    int nsemi = std::max(comp_size(out, g.first), 1);
    expect(g.second >= 0 && g.second < nsemi, "bad semiarc");
  };

  switch (site.kind) {
    case MoveKind::O1a:
    case MoveKind::O1b: {
      if (site.forward) {
        expect(site.pos.size() == 1, "one gap expected");
        check_gap(site.pos[0]);
        int id = out.fresh_id();
        std::vector<Passage> ps;
        if (site.kind == MoveKind::O1a)
          ps = {{PassageKind::Over, id, +1, ""}, {PassageKind::Under, id, +1, ""}};
        else
          ps = {{PassageKind::Under, id, -1, ""}, {PassageKind::Over, id, -1, ""}};
        insert_after(out, site.pos[0], ps);
      } else {
        expect(site.pos.size() == 1, "one pair expected");
        Pos p = site.pos[0];
        const Passage &a = at(out, p), &b = at(out, next_pos(out, p));
        expect(a.crossing == b.crossing && a.kind != PassageKind::Virtual &&
                   b.kind != PassageKind::Virtual && a.kind != b.kind,
               "not a kink pair");
        erase_positions(out, {p, next_pos(out, p)});
      }
      break;
    }
    case MoveKind::V1a:
    case MoveKind::V1b: {
      if (site.forward) {
        expect(site.pos.size() == 1, "one gap expected");
        expect(!site.type.empty(), "missing type");
        check_gap(site.pos[0]);
        if (std::find(out.types.begin(), out.types.end(), site.type) == out.types.end())
          out.types.push_back(site.type);
        int id = out.fresh_id();
        std::vector<Passage> ps;
        if (site.kind == MoveKind::V1a)
          ps = {{PassageKind::Virtual, id, -1, site.type},
                {PassageKind::Virtual, id, +1, site.type}};
        else
          ps = {{PassageKind::Virtual, id, +1, site.type},
                {PassageKind::Virtual, id, -1, site.type}};
        insert_after(out, site.pos[0], ps);
      } else {
        expect(site.pos.size() == 1, "one pair expected");
        Pos p = site.pos[0];
        const Passage &a = at(out, p), &b = at(out, next_pos(out, p));
        expect(a.crossing == b.crossing && a.kind == PassageKind::Virtual &&
                   b.kind == PassageKind::Virtual,
               "not a virtual kink pair");
        erase_positions(out, {p, next_pos(out, p)});
      }
      break;
    }
    case MoveKind::O2a:
    case MoveKind::V2a: {
      if (site.forward) {
        expect(site.pos.size() == 2, "two gaps expected");
        check_gap(site.pos[0]);
        check_gap(site.pos[1]);
        bool v = site.kind == MoveKind::V2a;
        if (v) {
          expect(!site.type.empty(), "missing type");
          if (std::find(out.types.begin(), out.types.end(), site.type) == out.types.end())
            out.types.push_back(site.type);
        }
        int x = out.fresh_id(), y = out.fresh_id();
        std::vector<Passage> pa, pb;
        if (v) {
          pa = {{PassageKind::Virtual, x, -1, site.type},
                {PassageKind::Virtual, y, +1, site.type}};
          pb = {{PassageKind::Virtual, x, +1, site.type},
                {PassageKind::Virtual, y, -1, site.type}};
        } else {
          pa = {{PassageKind::Over, x, +1, ""}, {PassageKind::Over, y, -1, ""}};
          pb = {{PassageKind::Under, x, +1, ""}, {PassageKind::Under, y, -1, ""}};
        }
        Pos g1 = site.pos[0], g2 = site.pos[1];
        // Insert the later gap first so the earlier index stays valid; for the
        // same gap the A pair ends up first.
        if (g1.first == g2.first) {
          if (g1.second >= g2.second) {
            insert_after(out, g1, pa);
            insert_after(out, g2, pb);
          } else {
            insert_after(out, g2, pb);
            insert_after(out, g1, pa);
          }
        } else {
          insert_after(out, g1, pa);
          insert_after(out, g2, pb);
        }
      } else {
        expect(site.pos.size() == 2, "two pairs expected");
        Pos pa = site.pos[0], pb = site.pos[1];
        Pos pa2 = next_pos(out, pa), pb2 = next_pos(out, pb);
        const Passage &a1 = at(out, pa), &a2 = at(out, pa2);
        const Passage &b1 = at(out, pb), &b2 = at(out, pb2);
        expect(a1.crossing == b1.crossing && a2.crossing == b2.crossing &&
                   a1.crossing != a2.crossing,
               "pairs do not cancel");
        erase_positions(out, {pa, pa2, pb, pb2});
      }
      break;
    }
    case MoveKind::O3a:
    case MoveKind::CV3a:
    case MoveKind::MV3a: {
      expect(site.pos.size() == 3, "three pairs expected");
      expect(match_triangle(d, site.kind, site.pos[0], site.pos[1], site.pos[2], site.forward),
             "triangle pattern does not match");
      for (Pos p : site.pos) swap_adjacent_pair(out, p);
      break;
    }
  }
  validate(out);
  return out;
}

}  // namespace mvq
