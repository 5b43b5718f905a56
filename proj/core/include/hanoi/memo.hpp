#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "hanoi/state_code.hpp"

namespace hanoi {

// Key for a four-peg subproblem: disk count plus packed positions.  Subproblem
// positions are always renumbered to {1..n} before keying, so identical
// shapes share entries regardless of where they came from.
struct Plan4Key {
  std::uint8_t n = 0;
  StateCode cur = 0;
  StateCode goal = 0;
  friend bool operator==(const Plan4Key&, const Plan4Key&) = default;
};

// Three-peg subproblem key; `unused` is the peg the relocation must avoid.
struct Plan3Key {
  std::uint8_t n = 0;
  std::uint8_t unused = 0;
  StateCode cur = 0;
  StateCode goal = 0;
  friend bool operator==(const Plan3Key&, const Plan3Key&) = default;
};

struct Plan4Entry {
  std::uint64_t length = 0;  // meaningful when solved
  std::int16_t mid = 0;      // winning split, 0 for base/strip clauses
  std::int16_t via_peg = 0;  // spare that parked the small tower
  bool solved = false;       // false: every candidate split came up empty
};

struct Plan3Entry {
  std::uint64_t length = 0;
};

struct MemoKeyHash {
  std::size_t operator()(const Plan4Key& k) const {
    return mix(k.cur * 0x9e3779b97f4a7c15ull ^ k.goal ^ k.n);
  }
  std::size_t operator()(const Plan3Key& k) const {
    return mix(k.cur * 0x9e3779b97f4a7c15ull ^ k.goal ^ (std::uint64_t(k.n) << 8) ^ k.unused);
  }

  static std::size_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

// Shared store for one solver run.  Entries are valid only for the heuristic
// and error bound they were computed under, so reuse a table across solves
// only when those settings match; the harness simply starts fresh each time.
struct MemoTable {
  std::unordered_map<Plan4Key, Plan4Entry, MemoKeyHash> plan4;
  std::unordered_map<Plan3Key, Plan3Entry, MemoKeyHash> plan3;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;

  std::size_t entry_count() const { return plan4.size() + plan3.size(); }
  std::size_t approx_bytes() const;
  void clear();
};

struct SolveLimits {
  std::size_t max_memo_entries = 0;  // 0 = unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class LimitKind { kNone, kMemoEntries, kDeadline };

std::string to_string(LimitKind k);

// Raised inside the solvers when a limit trips; plan4_solve folds it into a
// resource-limit outcome, while the plan3 entry points let it escape.
class SolverLimitError : public std::runtime_error {
 public:
  explicit SolverLimitError(LimitKind kind);
  LimitKind kind() const { return kind_; }

 private:
  LimitKind kind_;
};

}  // namespace hanoi
