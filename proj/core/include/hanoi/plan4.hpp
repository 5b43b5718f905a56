#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hanoi/config.hpp"
#include "hanoi/memo.hpp"
#include "hanoi/partitions.hpp"

namespace hanoi {

enum class SolveStatus { kSolved, kUnknown, kOverBound, kResourceLimit };

std::string_view to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnknown;
  std::uint64_t length = 0;          // kSolved / kOverBound
  Plan plan;                         // kSolved / kOverBound
  LimitKind limit = LimitKind::kNone;  // kResourceLimit detail

  bool solved() const { return status == SolveStatus::kSolved; }
};

// One split worth trying when the largest disk has to move: disks <= mid are
// parked as a tower on via_peg (the `parked` position), the rest travel on
// the other three pegs.
struct PartitionCandidate {
  int mid = 0;
  PegId via_peg = 0;
  Configuration parked;
};

// Candidate splits for a position pair whose largest disk is out of place.
// The two pegs not holding that disk qualify for a given mid only when every
// disk they carry -- in cur and in goal -- is at most mid (logically empty:
// clearable by the small-disk phases).  Ordered mid ascending, then peg
// ascending.  Pre: both positions valid, same n >= 2, largest disk on
// different pegs; violations throw std::logic_error.
std::vector<PartitionCandidate> partition_candidates(const Configuration& cur,
                                                     const Configuration& goal,
                                                     PartitionHeuristic h,
                                                     int error_bound);

// Four-peg search over the chosen heuristic's splits, memoized in `memo`:
//   - strip largest disks already in place;
//   - otherwise try each candidate (mid, via_peg): park the smalls on
//     via_peg (four-peg, recursive), relocate the larges three-peg around it,
//     unpark the smalls (four-peg, recursive);
//   - kUnknown when no candidate of any subproblem works out -- the
//     heuristic's window missed, a wider error bound or the exhaustive
//     heuristic may still succeed.
//
// Entries in `memo` are tied to (h, error_bound); pass a fresh table when
// changing either.  Throws std::invalid_argument for malformed input or
// mismatched disk counts (distinct from kUnknown).
SolveOutcome plan4_solve(const Configuration& cur, const Configuration& goal,
                         PartitionHeuristic h, int error_bound, MemoTable& memo,
                         const SolveLimits& limits = {});

// plan4_solve plus a step budget: a solution longer than max_steps comes back
// as kOverBound with the plan retained.
SolveOutcome solve_with_bound(const Configuration& start,
                              const Configuration& goal,
                              std::uint64_t max_steps, PartitionHeuristic h,
                              int error_bound, MemoTable& memo,
                              const SolveLimits& limits = {});

}  // namespace hanoi
