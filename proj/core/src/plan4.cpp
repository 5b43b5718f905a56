#include "hanoi/plan4.hpp"

#include <optional>
#include <stdexcept>

#include "hanoi/plan3.hpp"
#include "solver_detail.hpp"

namespace hanoi {
namespace {

struct P4Ctx {
  MemoTable& memo;
  PartitionHeuristic h;
  int bound;
  const SolveLimits& limits;
  detail::LimitChecker checker;
};

std::optional<std::uint64_t> p4_len(P4Ctx& ctx, Configuration cur,
                                    Configuration goal) {
  while (strip_largest_in_place(cur, goal)) {
  }
  const int n = cur.disk_count();
  if (n == 0) return 0;

  const Plan4Key key{static_cast<std::uint8_t>(n), encode_state(cur),
                     encode_state(goal)};
  if (auto it = ctx.memo.plan4.find(key); it != ctx.memo.plan4.end()) {
    ++ctx.memo.hits;
    const Plan4Entry& e = it->second;
    return e.solved ? std::optional<std::uint64_t>(e.length) : std::nullopt;
  }
  ++ctx.memo.misses;
  ctx.checker.on_miss();

  Plan4Entry entry;
  if (n == 1) {
    entry = {1, 0, 0, true};
  } else {
    for (const PartitionCandidate& c :
         partition_candidates(cur, goal, ctx.h, ctx.bound)) {
      const auto park = p4_len(ctx, restrict_small(cur, c.mid), c.parked);
      if (!park) continue;
      const std::uint64_t across =
          plan3_length({restrict_large(cur, c.mid), restrict_large(goal, c.mid),
                        c.via_peg},
                       ctx.memo, ctx.limits);
      const auto unpark = p4_len(ctx, c.parked, restrict_small(goal, c.mid));
      if (!unpark) continue;
      const std::uint64_t total = *park + across + *unpark;
      if (!entry.solved || total < entry.length) {
        entry = {total, static_cast<std::int16_t>(c.mid),
                 static_cast<std::int16_t>(c.via_peg), true};
      }
    }
  }
  ctx.memo.plan4.emplace(key, entry);
  return entry.solved ? std::optional<std::uint64_t>(entry.length)
                      : std::nullopt;
}

// Re-descends along the memoized winners; every subproblem on the winning
// path is guaranteed solved and present.
void p4_emit(P4Ctx& ctx, Configuration cur, Configuration goal, Plan& out) {
  while (strip_largest_in_place(cur, goal)) {
  }
  const int n = cur.disk_count();
  if (n == 0) return;
  if (n == 1) {
    out.push_back({bottom_peg(cur, 1), bottom_peg(goal, 1)});
    return;
  }
  const Plan4Key key{static_cast<std::uint8_t>(n), encode_state(cur),
                     encode_state(goal)};
  const auto it = ctx.memo.plan4.find(key);
  if (it == ctx.memo.plan4.end() || !it->second.solved)
    throw std::logic_error("plan4: reconstruction hit an unsolved subproblem");
  const int mid = it->second.mid;
  const PegId via = it->second.via_peg;
  const Configuration parked = full_tower(mid, via);
  p4_emit(ctx, restrict_small(cur, mid), parked, out);
  const Plan across = plan3_solve(
      {restrict_large(cur, mid), restrict_large(goal, mid), via}, ctx.memo,
      ctx.limits);
  out.insert(out.end(), across.begin(), across.end());
  p4_emit(ctx, parked, restrict_small(goal, mid), out);
}

void check_inputs(const Configuration& cur, const Configuration& goal) {
  const ConfigCheck a = validate_configuration(cur);
  if (!a.ok()) throw std::invalid_argument("plan4: bad cur: " + a.message());
  const ConfigCheck b = validate_configuration(goal);
  if (!b.ok()) throw std::invalid_argument("plan4: bad goal: " + b.message());
  if (cur.disk_count() != goal.disk_count())
    throw std::invalid_argument("plan4: cur and goal disk counts differ");
  if (cur.disk_count() > kMaxCodedDisks)
    throw std::invalid_argument("plan4: too many disks for packed keys");
}

}  // namespace

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved: return "solved";
    case SolveStatus::kUnknown: return "unknown";
    case SolveStatus::kOverBound: return "over-bound";
    case SolveStatus::kResourceLimit: return "resource-limit";
  }
  return "bad-status";
}

std::vector<PartitionCandidate> partition_candidates(const Configuration& cur,
                                                     const Configuration& goal,
                                                     PartitionHeuristic h,
                                                     int error_bound) {
  const int n = cur.disk_count();
  if (n < 2 || goal.disk_count() != n)
    throw std::logic_error("partition_candidates: needs matching n >= 2");
  const PegId from = bottom_peg(cur, n);
  const PegId to = bottom_peg(goal, n);
  if (from == to)
    throw std::logic_error("partition_candidates: largest disk already placed");

  PegId spares[2];
  int count = 0;
  for (PegId p = 1; p <= kPegCount; ++p)
    if (p != from && p != to) spares[count++] = p;

  // A spare is clearable for a split when its lowest disk fits the small side.
  const auto clearable = [](const Configuration& c, PegId p, int mid) {
    const auto& st = c.peg(p);
    return st.empty() || st.front() <= mid;
  };

  std::vector<PartitionCandidate> out;
  for (int mid : candidate_mids(h, n, error_bound)) {
    for (PegId p : spares) {
      if (clearable(cur, p, mid) && clearable(goal, p, mid))
        out.push_back({mid, p, full_tower(mid, p)});
    }
  }
  return out;
}

SolveOutcome plan4_solve(const Configuration& cur, const Configuration& goal,
                         PartitionHeuristic h, int error_bound, MemoTable& memo,
                         const SolveLimits& limits) {
  check_inputs(cur, goal);
  P4Ctx ctx{memo, h, error_bound, limits, detail::LimitChecker(limits, memo)};
  SolveOutcome out;
  try {
    const auto len = p4_len(ctx, cur, goal);
    if (!len) return out;  // kUnknown
    out.status = SolveStatus::kSolved;
    out.length = *len;
    out.plan.reserve(static_cast<std::size_t>(*len));
    p4_emit(ctx, cur, goal, out.plan);
  } catch (const SolverLimitError& e) {
    return {SolveStatus::kResourceLimit, 0, {}, e.kind()};
  }
  if (out.plan.size() != out.length)
    throw std::logic_error("plan4: reconstruction length mismatch");
  return out;
}

SolveOutcome solve_with_bound(const Configuration& start,
                              const Configuration& goal,
                              std::uint64_t max_steps, PartitionHeuristic h,
                              int error_bound, MemoTable& memo,
                              const SolveLimits& limits) {
  SolveOutcome out = plan4_solve(start, goal, h, error_bound, memo, limits);
  if (out.status == SolveStatus::kSolved && out.length > max_steps)
    out.status = SolveStatus::kOverBound;
  return out;
}

}  // namespace hanoi
