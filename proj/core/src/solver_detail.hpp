#pragma once

#include "hanoi/memo.hpp"

namespace hanoi::detail {

// Cooperative limit enforcement, consulted on every memo miss.  The deadline
// is sampled on the first miss and then every 64th, keeping clock reads off
// the hot path while still catching an already-expired deadline immediately.
class LimitChecker {
 public:
  LimitChecker(const SolveLimits& limits, const MemoTable& memo)
      : limits_(limits), memo_(memo) {}

  void on_miss() {
    if (limits_.max_memo_entries != 0 &&
        memo_.entry_count() >= limits_.max_memo_entries)
      throw SolverLimitError(LimitKind::kMemoEntries);
    if (limits_.deadline && tick_++ % 64 == 0 &&
        std::chrono::steady_clock::now() >= *limits_.deadline)
      throw SolverLimitError(LimitKind::kDeadline);
  }

 private:
  const SolveLimits& limits_;
  const MemoTable& memo_;
  unsigned tick_ = 0;
};

}  // namespace hanoi::detail
