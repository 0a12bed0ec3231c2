#pragma once

#include <string>
#include <vector>

#include "mvq/diagram.hpp"

namespace mvq {

// The generating set of oriented moves. O1a/O1b/O2a/O3a are the classical
// generators, v1a/v1b/v2a the purely virtual ones, cv3a/mv3a the mixed slides.
enum class MoveKind { O1a, O1b, O2a, O3a, V1a, V1b, V2a, CV3a, MV3a };

const char* move_name(MoveKind k);

// A concrete applicable rewrite.
//
// Kink and R2-type moves come in insert (forward) and delete (backward)
// variants. For inserts, pos holds the target semiarcs: one (component,
// semiarc) entry for kinks, two for O2a/v2a (first receives the over / the
// (-,+) chirality pair). For deletes, pos holds the left position of each
// adjacent passage pair to remove.
//
// Triangle moves (O3a, cv3a, mv3a) hold three pair positions in role order
// [moving-over strand, moving-under strand, slid strand]; forward rewrites
// the left-hand pattern to the right-hand one, backward the reverse. Both
// directions swap each of the three adjacent pairs.
struct MoveSite {
  MoveKind kind = MoveKind::O1a;
  bool forward = true;
  std::vector<std::pair<int, int>> pos;
  std::string type;  // virtual type parameter for v1a/v1b/v2a/cv3a/mv3a inserts
};

// Every site where kind applies, both directions, in scan order.
std::vector<MoveSite> enumerate_move_sites(const Diagram& d, MoveKind kind);

// Applies the rewrite, allocating fresh crossing ids for insertions. The
// input is unchanged; the result is validated.
Diagram apply_move(const Diagram& d, const MoveSite& site);

}  // namespace mvq
