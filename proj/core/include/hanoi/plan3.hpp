#pragma once

#include <cstdint>

#include "hanoi/config.hpp"
#include "hanoi/memo.hpp"

namespace hanoi {

// Relocation restricted to three pegs: move cur to goal without ever
// touching `unused`.  Always solvable.
struct Plan3Problem {
  Configuration cur;
  Configuration goal;
  PegId unused = 0;
};

// Minimum move count under the three-peg scheme: strip largest disks already
// in place, then for the deepest misplaced disk pile the smaller ones onto
// the free peg, move it, and unpile.  Memoized in `memo`.
//
// Throws std::invalid_argument when cur/goal are malformed, hold different
// disk counts, or occupy the unused peg; SolverLimitError when `limits` trip.
std::uint64_t plan3_length(const Plan3Problem& p, MemoTable& memo,
                           const SolveLimits& limits = {});

// The move sequence itself; deterministic, length == plan3_length.
Plan plan3_solve(const Plan3Problem& p, MemoTable& memo,
                 const SolveLimits& limits = {});

}  // namespace hanoi
