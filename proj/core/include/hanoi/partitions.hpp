#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hanoi {

// Ways of picking the split rank Mid: disks <= Mid are parked on a spare peg,
// disks > Mid travel with three pegs only.  The first six come from closed
// formulas or triangular-number searches; kExhaustive tries every split.
enum class PartitionHeuristic {
  kRand,
  kLiefvoort,
  kRohlGedeon,
  kTriSmallestGeq,
  kTriLargestLeq,
  kStockmeyer,
  kExhaustive,
};

// The six formula-guided heuristics, in declaration order.
inline constexpr std::array<PartitionHeuristic, 6> kGuidedHeuristics = {
    PartitionHeuristic::kRand,          PartitionHeuristic::kLiefvoort,
    PartitionHeuristic::kRohlGedeon,    PartitionHeuristic::kTriSmallestGeq,
    PartitionHeuristic::kTriLargestLeq, PartitionHeuristic::kStockmeyer,
};

inline constexpr std::array<PartitionHeuristic, 7> kAllHeuristics = {
    PartitionHeuristic::kRand,          PartitionHeuristic::kLiefvoort,
    PartitionHeuristic::kRohlGedeon,    PartitionHeuristic::kTriSmallestGeq,
    PartitionHeuristic::kTriLargestLeq, PartitionHeuristic::kStockmeyer,
    PartitionHeuristic::kExhaustive,
};

// Command-line token, e.g. "rohl-gedeon".
std::string_view heuristic_name(PartitionHeuristic h);
std::optional<PartitionHeuristic> heuristic_from_name(std::string_view name);

// Exact integer square root: the largest r with r*r <= x.
std::uint64_t isqrt(std::uint64_t x);

// k-th triangular number k(k+1)/2, served from an append-only memo table.
// Safe for concurrent use.
std::uint64_t triangular(int k);

// Raw split estimates for n disks, before any windowing or clamping; one
// value for most heuristics, two (larger first) for Stockmeyer off the
// triangular numbers.  Values may fall outside [1, n-1]; candidate_mids
// clamps.  kExhaustive has no formula and yields an empty list.
std::vector<int> estimate_mid(PartitionHeuristic h, int n);

// Split ranks worth trying for n disks, ascending and deduplicated.
// Guided heuristics take each estimate, clamp it into [1, n-1], and widen it
// by error_bound in both directions (intersected with [1, n-1]).
// kExhaustive returns all of 1..n-1.  Empty when n < 2.
std::vector<int> candidate_mids(PartitionHeuristic h, int n, int error_bound);

}  // namespace hanoi
