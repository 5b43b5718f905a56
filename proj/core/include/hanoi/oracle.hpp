#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hanoi/config.hpp"

namespace hanoi {

// Default and hard ceilings for exhaustive search; 4^n states get painful
// quickly.  Up to 12 disks the visited sets are flat arrays, above that they
// fall back to hashing.
inline constexpr int kDefaultBfsCap = 10;
inline constexpr int kMaxBfsDisks = 14;

class BfsCapacityError : public std::runtime_error {
 public:
  explicit BfsCapacityError(int n, int cap);
};

struct BfsResult {
  std::uint64_t length = 0;
  Plan witness;  // one optimal move sequence
};

// Exact optimum between two positions by bidirectional breadth-first search
// over packed states.  Independent of the planners: shares only the state
// encoding.  Throws BfsCapacityError when n exceeds cap and
// std::invalid_argument for malformed input.
BfsResult bfs_optimal(const Configuration& cur, const Configuration& goal,
                      int cap = kDefaultBfsCap);

// Presumed-optimal classic four-peg count:
//   f(0) = 0,  f(n) = min over 0 <= k < n of 2 f(k) + 2^(n-k) - 1.
// Memoized; n up to 63.
std::uint64_t frame_stewart_number(int n);

// Every k attaining the minimum above (diagnostics for split ties); empty
// for n = 0.
std::vector<int> frame_stewart_argmin(int n);

// Classic three-peg count 2^n - 1; n up to 63.
std::uint64_t three_peg_number(int n);

}  // namespace hanoi
