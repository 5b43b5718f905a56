#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "hanoi/oracle.hpp"
#include "hanoi/plan3.hpp"

using namespace hanoi;

namespace {

// Scatter n disks over the three pegs != unused.
Configuration random_three_peg(int n, PegId unused, std::mt19937_64& rng) {
  PegId open[3];
  int w = 0;
  for (PegId p = 1; p <= 4; ++p)
    if (p != unused) open[w++] = p;
  Configuration c;
  for (Disk d = n; d >= 1; --d) c.peg(open[rng() % 3]).push_back(d);
  return c;
}

bool touches(const Plan& plan, PegId peg) {
  return std::any_of(plan.begin(), plan.end(),
                     [&](Move m) { return m.from == peg || m.to == peg; });
}

}  // namespace

TEST_CASE("small frozen relocation") {
  // 2 on peg1, 1 on peg3, both to peg2, peg4 off limits.  Two moves: the
  // big disk first, then the small one on top.
  MemoTable memo;
  const Plan3Problem p{make_configuration({2}, {}, {1}),
                       make_configuration({}, {2, 1}), 4};
  CHECK(plan3_length(p, memo) == 2);
  CHECK(plan3_solve(p, memo) == Plan{{1, 2}, {3, 2}});
}

TEST_CASE("tower relocation costs 2^m - 1") {
  MemoTable memo;
  for (int m = 1; m <= 15; ++m) {
    const Plan3Problem p{full_tower(m, 1), full_tower(m, 3), 2};
    CHECK(plan3_length(p, memo) == three_peg_number(m));
    const Plan plan = plan3_solve(p, memo);
    CHECK(plan.size() == three_peg_number(m));
    CHECK(validate_plan(p.cur, p.goal, plan).ok());
    CHECK_FALSE(touches(plan, 2));
  }
}

TEST_CASE("already in place costs nothing") {
  MemoTable memo;
  const Plan3Problem p{full_tower(6, 2), full_tower(6, 2), 1};
  CHECK(plan3_length(p, memo) == 0);
  CHECK(plan3_solve(p, memo).empty());
}

TEST_CASE("plans replay, avoid the unused peg, and are scheme-minimal") {
  std::mt19937_64 rng(77001);
  MemoTable memo;
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);  // 1..8
    const PegId unused = 1 + static_cast<PegId>(rng() % 4);
    const Plan3Problem p{random_three_peg(n, unused, rng),
                         random_three_peg(n, unused, rng), unused};
    const std::uint64_t len = plan3_length(p, memo);
    const Plan plan = plan3_solve(p, memo);
    CHECK(plan.size() == len);
    CHECK(validate_plan(p.cur, p.goal, plan).ok());
    CHECK_FALSE(touches(plan, unused));
    // Unrestricted four-peg optimum can only be shorter.
    CHECK(bfs_optimal(p.cur, p.goal).length <= len);
    // Second run with a fresh memo is identical.
    MemoTable fresh;
    CHECK(plan3_solve(p, fresh) == plan);
  }
}

TEST_CASE("memo is consulted") {
  MemoTable memo;
  const Plan3Problem p{full_tower(10, 1), full_tower(10, 3), 2};
  plan3_length(p, memo);
  CHECK(memo.misses > 0);
  const std::size_t misses_before = memo.misses;
  plan3_length(p, memo);  // fully memoized now
  CHECK(memo.misses == misses_before);
  CHECK(memo.hits > 0);
  CHECK(memo.entry_count() > 0);
  memo.clear();
  CHECK(memo.entry_count() == 0);
  CHECK(memo.hits == 0);
}

TEST_CASE("input validation") {
  MemoTable memo;
  // Disk parked on the unused peg.
  CHECK_THROWS_AS(plan3_length({make_configuration({}, {1}),
                                make_configuration({}, {}, {1}), 2},
                               memo),
                  std::invalid_argument);
  // Mismatched disk counts.
  CHECK_THROWS_AS(
      plan3_length({full_tower(2, 1), full_tower(3, 1), 4}, memo),
      std::invalid_argument);
  // Bad unused peg id.
  CHECK_THROWS_AS(
      plan3_length({full_tower(2, 1), full_tower(2, 3), 5}, memo),
      std::invalid_argument);
  // Malformed position.
  CHECK_THROWS_AS(
      plan3_length({make_configuration({1, 2}), full_tower(2, 1), 4}, memo),
      std::invalid_argument);
}

TEST_CASE("limits interrupt long solves") {
  const Plan3Problem p{full_tower(12, 1), full_tower(12, 3), 2};
  SolveLimits limits;
  limits.max_memo_entries = 3;
  MemoTable memo;
  CHECK_THROWS_AS(plan3_length(p, memo, limits), SolverLimitError);

  SolveLimits past;
  past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  MemoTable memo2;
  try {
    plan3_length(p, memo2, past);
    FAIL("expected SolverLimitError");
  } catch (const SolverLimitError& e) {
    CHECK(e.kind() == LimitKind::kDeadline);
  }
}
