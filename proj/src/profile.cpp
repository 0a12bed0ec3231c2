#include "mvq/profile.hpp"

#include <algorithm>
#include <set>

#include "mvq/aut.hpp"

namespace mvq {

namespace {

std::vector<std::string> types_in_use(const Diagram& d) {
  std::vector<std::string> out;
  for (const auto& comp : d.components)
    for (const auto& p : comp)
      if (p.kind == PassageKind::Virtual &&
          std::find(out.begin(), out.end(), p.type) == out.end())
        out.push_back(p.type);
  return out;
}

}  // namespace

InvariantProfile invariant_profile(const Diagram& d, const MultiplicationTable& quandle,
                                   int k_types, int tuple_size) {
  auto used = types_in_use(d);
  if (static_cast<int>(used.size()) > k_types)
    throw DomainError("diagram uses more types than k_types");

  InvariantProfile prof;
  prof.schemes = typing_schemes_for_pairs(k_types);
  prof.auts = automorphism_group(quandle);
  prof.tuples = commuting_tuples(prof.auts, tuple_size, true);
  if (prof.tuples.empty()) throw DomainError("no commuting automorphism tuples of size " +
                                             std::to_string(tuple_size));

  prof.counts.assign(prof.schemes.size(), {});
  for (std::size_t si = 0; si < prof.schemes.size(); ++si) {
    const auto& scheme = prof.schemes[si];
    prof.counts[si].reserve(prof.tuples.size());
    for (const auto& tup : prof.tuples) {
      OperatorQuandle oq;
      oq.quandle = quandle;
      for (std::size_t t = 0; t < used.size(); ++t)
        oq.operators[used[t]] = prof.auts[tup[scheme[t] - 1]];
      prof.counts[si].push_back(count_colorings(d, oq));
    }
  }
  return prof;
}

DistinguishReport distinguish(const Diagram& d1, const Diagram& d2,
                              const MultiplicationTable& quandle, const CocycleTable* phi) {
  DistinguishReport rep;
  auto t1 = types_in_use(d1), t2 = types_in_use(d2);
  std::set<std::string> all(t1.begin(), t1.end());
  all.insert(t2.begin(), t2.end());
  rep.types.assign(all.begin(), all.end());

  auto auts = automorphism_group(quandle);
  int k = static_cast<int>(rep.types.size());
  auto tuples = commuting_tuples(auts, std::max(k, 1), false);

  for (const auto& tup : tuples) {
    OperatorQuandle oq;
    oq.quandle = quandle;
    for (std::size_t t = 0; t < rep.types.size(); ++t) oq.operators[rep.types[t]] = auts[tup[t]];
    DistinguishReport::Line line;
    line.tuple = tup;
    line.col1 = count_colorings(d1, oq);
    line.col2 = count_colorings(d2, oq);
    line.differs = line.col1 != line.col2;
    if (phi && is_operator_cocycle(oq, *phi)) {
      GroupRingElement v1 = cocycle_invariant(d1, oq, *phi);
      GroupRingElement v2 = cocycle_invariant(d2, oq, *phi);
      line.coc1 = to_string(v1, phi->group);
      line.coc2 = to_string(v2, phi->group);
      if (!(v1 == v2)) line.differs = true;
    }
    if (line.differs) rep.distinguished = true;
    rep.lines.push_back(std::move(line));
  }
  return rep;
}

}  // namespace mvq
