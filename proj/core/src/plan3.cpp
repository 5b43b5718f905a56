#include "hanoi/plan3.hpp"

#include <stdexcept>

#include "solver_detail.hpp"

namespace hanoi {
namespace {

struct P3Ctx {
  MemoTable& memo;
  detail::LimitChecker checker;
};

// The peg in 1..4 that is none of a, b, c (all distinct).
PegId remaining_peg(PegId a, PegId b, PegId c) {
  return 1 + 2 + 3 + 4 - a - b - c;
}

std::uint64_t p3_len(P3Ctx& ctx, Configuration cur, Configuration goal,
                     PegId unused) {
  while (strip_largest_in_place(cur, goal)) {
  }
  const int n = cur.disk_count();
  if (n == 0) return 0;

  const Plan3Key key{static_cast<std::uint8_t>(n),
                     static_cast<std::uint8_t>(unused), encode_state(cur),
                     encode_state(goal)};
  if (auto it = ctx.memo.plan3.find(key); it != ctx.memo.plan3.end()) {
    ++ctx.memo.hits;
    return it->second.length;
  }
  ++ctx.memo.misses;
  ctx.checker.on_miss();

  std::uint64_t len;
  if (n == 1) {
    len = 1;
  } else {
    // Park 1..n-1 on the free peg, carry disk n across, unpark.
    const PegId from = bottom_peg(cur, n);
    const PegId to = bottom_peg(goal, n);
    const PegId tmp = remaining_peg(from, to, unused);
    const Configuration parked = full_tower(n - 1, tmp);
    len = p3_len(ctx, restrict_small(cur, n - 1), parked, unused) + 1 +
          p3_len(ctx, parked, restrict_small(goal, n - 1), unused);
  }
  ctx.memo.plan3.emplace(key, Plan3Entry{len});
  return len;
}

void p3_emit(Configuration cur, Configuration goal, PegId unused, Plan& out) {
  while (strip_largest_in_place(cur, goal)) {
  }
  const int n = cur.disk_count();
  if (n == 0) return;
  const PegId from = bottom_peg(cur, n);
  const PegId to = bottom_peg(goal, n);
  if (n == 1) {
    out.push_back({from, to});
    return;
  }
  const PegId tmp = remaining_peg(from, to, unused);
  const Configuration parked = full_tower(n - 1, tmp);
  p3_emit(restrict_small(cur, n - 1), parked, unused, out);
  out.push_back({from, to});
  p3_emit(parked, restrict_small(goal, n - 1), unused, out);
}

void check_problem(const Plan3Problem& p) {
  if (p.unused < 1 || p.unused > kPegCount)
    throw std::invalid_argument("plan3: unused peg outside 1..4");
  if (!p.cur.peg(p.unused).empty() || !p.goal.peg(p.unused).empty())
    throw std::invalid_argument("plan3: a position occupies the unused peg");
  const ConfigCheck a = validate_configuration(p.cur);
  if (!a.ok()) throw std::invalid_argument("plan3: bad cur: " + a.message());
  const ConfigCheck b = validate_configuration(p.goal);
  if (!b.ok()) throw std::invalid_argument("plan3: bad goal: " + b.message());
  if (p.cur.disk_count() != p.goal.disk_count())
    throw std::invalid_argument("plan3: cur and goal disk counts differ");
  if (p.cur.disk_count() > kMaxCodedDisks)
    throw std::invalid_argument("plan3: too many disks for packed keys");
}

}  // namespace

std::uint64_t plan3_length(const Plan3Problem& p, MemoTable& memo,
                           const SolveLimits& limits) {
  check_problem(p);
  P3Ctx ctx{memo, detail::LimitChecker(limits, memo)};
  return p3_len(ctx, p.cur, p.goal, p.unused);
}

Plan plan3_solve(const Plan3Problem& p, MemoTable& memo,
                 const SolveLimits& limits) {
  const std::uint64_t len = plan3_length(p, memo, limits);
  Plan out;
  out.reserve(static_cast<std::size_t>(len));
  p3_emit(p.cur, p.goal, p.unused, out);
  if (out.size() != len)
    throw std::logic_error("plan3: reconstruction length mismatch");
  return out;
}

}  // namespace hanoi
