#include "mvq/fixtures.hpp"

#include <cstdio>
#include <map>

namespace mvq {

namespace {

Passage O(int id, int sign) { return {PassageKind::Over, id, sign, ""}; }
Passage U(int id, int sign) { return {PassageKind::Under, id, sign, ""}; }
Passage V(const std::string& type, int id, int chir) {
  return {PassageKind::Virtual, id, chir, type};
}

Diagram make(std::vector<std::string> types, std::vector<std::vector<Passage>> comps) {
  Diagram d;
  d.types = std::move(types);
  d.components = std::move(comps);
  for (const auto& c : d.components)
    for (const auto& p : c) d.next_id = std::max(d.next_id, p.crossing + 1);
  validate(d);
  return d;
}

const std::string A = "alpha", B = "beta";

}  // namespace

Diagram twist_knot_k(int n) {
  if (n < 1) throw DomainError("K(n) needs n >= 1");
  // 2n virtual crossings alternating alpha/beta, one positive classical
  // crossing, plat-closed. Walking: down one leg through all the twists,
  // over the classical crossing, back through all the twists, under.
  std::vector<Passage> comp;
  for (int j = 1; j <= 2 * n; ++j) {
    bool alpha = j % 2 == 1;
    comp.push_back(V(alpha ? A : B, 1 + j, alpha ? -1 : +1));
  }
  comp.push_back(O(1, +1));
  for (int j = 1; j <= 2 * n; ++j) {
    bool alpha = j % 2 == 1;
    comp.push_back(V(alpha ? A : B, 1 + j, alpha ? +1 : -1));
  }
  comp.push_back(U(1, +1));
  return make({A, B}, {comp});
}

Diagram chain_link_l(int i, int j) {
  if (i < 0 || j < 0) throw DomainError("L(i,j) needs i,j >= 0");
  // A main loop threading i rings attached by node pairs and j rings attached
  // by one box and one circle crossing each.
  std::vector<std::string> types;
  if (i > 0) types.push_back("node");
  if (j > 0) {
    types.push_back("box");
    types.push_back("circle");
  }
  std::vector<Passage> main;
  std::vector<std::vector<Passage>> comps;
  int id = 1;
  for (int k = 0; k < i; ++k) {
    int n1 = id++, n2 = id++;
    main.push_back(V("node", n1, +1));
    main.push_back(V("node", n2, +1));
    comps.push_back({V("node", n1, -1), V("node", n2, -1)});
  }
  for (int k = 0; k < j; ++k) {
    int b = id++, c = id++;
    main.push_back(V("box", b, +1));
    main.push_back(V("circle", c, +1));
    comps.push_back({V("box", b, -1), V("circle", c, -1)});
  }
  comps.insert(comps.begin(), main);
  return make(types, comps);
}

Diagram builtin_diagram(const std::string& name) {
  if (name == "unknot") return make({}, {{}});

  if (name == "2_1")
    return make({A}, {{O(1, -1), V(A, 4, -1), O(2, -1), U(1, -1), V(A, 4, +1), U(2, -1)}});

  if (name == "3_1")
    return make({A, B}, {{V(B, 5, -1), O(1, -1), V(A, 4, -1), O(2, -1), U(1, -1), V(B, 5, +1),
                          U(3, +1), V(A, 4, +1), U(2, -1), O(3, +1)}});

  if (name == "3_2")
    return make({A}, {{O(1, -1), V(A, 4, +1), O(2, +1), U(1, -1), O(3, -1), U(2, +1),
                       V(A, 4, -1), U(3, -1)}});

  if (name == "3_3")
    return make({A, B}, {{O(2, -1), V(B, 5, -1), O(1, -1), V(A, 4, -1), O(3, -1), U(1, -1),
                          V(B, 5, +1), U(2, -1), V(A, 4, +1), U(3, -1)}});

  if (name == "3_4")
    return make({A, B}, {{V(A, 4, -1), O(2, -1), V(B, 5, -1), O(1, -1), O(3, +1), V(A, 4, +1),
                          U(1, -1), V(B, 5, +1), U(2, -1), U(3, +1)}});

  if (name == "3_5")
    return make({A, B}, {{O(1, -1), V(B, 5, -1), O(2, -1), V(A, 4, -1), O(3, -1), U(1, -1),
                          V(B, 5, +1), U(2, -1), V(A, 4, +1), U(3, -1)}});

  if (name == "3_6")
    return make({}, {{O(1, -1), U(3, -1), O(2, -1), U(1, -1), O(3, -1), U(2, -1)}});

  if (name == "3_7")
    return make({A, B}, {{V(A, 4, +1), O(1, +1), V(B, 5, +1), U(3, -1), O(2, -1), V(A, 4, -1),
                          U(1, +1), V(B, 5, -1), O(3, -1), U(2, -1)}});

  if (name == "special_pair_left")
    return make({A, B}, {{V(A, 4, +1), O(2, +1), V(B, 5, +1), U(1, -1)},
                         {V(B, 5, -1), V(A, 6, +1), V(B, 7, -1), O(1, -1), V(A, 6, -1),
                          V(B, 7, +1), V(A, 4, -1), U(2, +1)}});

  if (name == "special_pair_right") {
    Diagram left = builtin_diagram("special_pair_left");
    return retype(left, {{A, B}, {B, A}});
  }

  int a = 0, b = 0;
  if (std::sscanf(name.c_str(), "K(%d)", &a) == 1) return twist_knot_k(a);
  if (std::sscanf(name.c_str(), "L(%d,%d)", &a, &b) == 2) return chain_link_l(a, b);

  throw DomainError("unknown builtin diagram '" + name + "'");
}

std::vector<std::string> builtin_diagram_names() {
  return {"unknot", "2_1",  "3_1", "3_2", "3_3", "3_4",
          "3_5",    "3_6",  "3_7", "K(n)", "L(i,j)", "special_pair_left",
          "special_pair_right"};
}

}  // namespace mvq
