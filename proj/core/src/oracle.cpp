#include "hanoi/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <mutex>
#include <string>
#include <unordered_map>

#include "hanoi/state_code.hpp"

namespace hanoi {
namespace {

// Per-state bookkeeping packed into 16 bits: low byte is the BFS depth, the
// high byte a visited flag, the owning search direction, and the move that
// first reached the state (for walking the path back).
constexpr std::uint16_t kVisitedBit = 0x8000;
constexpr std::uint16_t kBackwardBit = 0x4000;
constexpr int kNoMove = 15;  // from == to cannot occur in a real move

std::uint16_t pack_mark(bool backward, int move4, int depth) {
  return static_cast<std::uint16_t>(kVisitedBit | (backward ? kBackwardBit : 0) |
                                    (move4 << 8) | depth);
}

int mark_move(std::uint16_t m) { return (m >> 8) & 0xF; }
int mark_depth(std::uint16_t m) { return m & 0xFF; }
bool mark_backward(std::uint16_t m) { return (m & kBackwardBit) != 0; }

// Flat array for n <= 12, hash map above; one store serves both directions.
class VisitedSet {
 public:
  explicit VisitedSet(int n) : flat_(n <= 12) {
    if (flat_) flat_marks_.assign(std::size_t{1} << (2 * n), 0);
  }

  std::uint16_t get(StateCode c) const {
    if (flat_) return flat_marks_[c];
    const auto it = hashed_.find(c);
    return it == hashed_.end() ? 0 : it->second;
  }

  void put(StateCode c, std::uint16_t mark) {
    if (flat_)
      flat_marks_[c] = mark;
    else
      hashed_.emplace(c, mark);
  }

 private:
  bool flat_;
  std::vector<std::uint16_t> flat_marks_;
  std::unordered_map<StateCode, std::uint16_t> hashed_;
};

// Smallest disk per peg (0 = empty) for a packed n-disk state.
std::array<int, 4> peg_tops(int n, StateCode code) {
  std::array<int, 4> top{0, 0, 0, 0};
  for (int d = n; d >= 1; --d) top[(code >> (2 * (d - 1))) & 3u] = d;
  return top;
}

// Flips one disk between two pegs (XOR is direction-agnostic).
StateCode flipped(StateCode code, int disk, int a, int b) {
  return code ^ (static_cast<StateCode>(a ^ b) << (2 * (disk - 1)));
}

// Moves along a forward-search state back to the start, appended in
// start-to-state order.
void unwind_forward(const VisitedSet& seen, int n, StateCode state, Plan& out) {
  std::vector<Move> rev;
  StateCode at = state;
  std::uint16_t mark = seen.get(at);
  while (mark_move(mark) != kNoMove) {
    const int mv = mark_move(mark);
    const int from = mv >> 2, to = mv & 3;
    rev.push_back({from + 1, to + 1});
    at = flipped(at, peg_tops(n, at)[to], to, from);
    mark = seen.get(at);
  }
  out.insert(out.end(), rev.rbegin(), rev.rend());
}

// Moves from a backward-search state down to the goal, appended in
// state-to-goal order (each stored move gets reversed).
void unwind_backward(const VisitedSet& seen, int n, StateCode state, Plan& out) {
  StateCode at = state;
  std::uint16_t mark = seen.get(at);
  while (mark_move(mark) != kNoMove) {
    const int mv = mark_move(mark);
    const int from = mv >> 2, to = mv & 3;
    out.push_back({to + 1, from + 1});
    at = flipped(at, peg_tops(n, at)[to], to, from);
    mark = seen.get(at);
  }
}

}  // namespace

BfsCapacityError::BfsCapacityError(int n, int cap)
    : std::runtime_error("breadth-first search capacity exceeded: n=" +
                         std::to_string(n) + " > cap=" + std::to_string(cap)) {}

BfsResult bfs_optimal(const Configuration& cur, const Configuration& goal,
                      int cap) {
  const ConfigCheck a = validate_configuration(cur);
  if (!a.ok()) throw std::invalid_argument("bfs_optimal: bad cur: " + a.message());
  const ConfigCheck b = validate_configuration(goal);
  if (!b.ok()) throw std::invalid_argument("bfs_optimal: bad goal: " + b.message());
  const int n = cur.disk_count();
  if (goal.disk_count() != n)
    throw std::invalid_argument("bfs_optimal: disk counts differ");
  const int effective_cap = std::min(cap, kMaxBfsDisks);
  if (n > effective_cap) throw BfsCapacityError(n, effective_cap);

  const StateCode s = encode_state(cur);
  const StateCode g = encode_state(goal);
  if (s == g) return {0, {}};

  VisitedSet seen(n);
  std::vector<StateCode> fwd{s}, bwd{g};
  seen.put(s, pack_mark(false, kNoMove, 0));
  seen.put(g, pack_mark(true, kNoMove, 0));
  int fwd_depth = 0, bwd_depth = 0;

  for (;;) {
    const bool backward = bwd.size() < fwd.size();
    std::vector<StateCode>& frontier = backward ? bwd : fwd;
    const int depth = backward ? bwd_depth : fwd_depth;
    if (depth + 1 > 0xFF)
      throw std::logic_error("bfs_optimal: depth overflows the mark byte");

    std::vector<StateCode> next;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    StateCode best_pred = 0, best_meet = 0;
    int best_move = kNoMove;

    for (const StateCode code : frontier) {
      const std::array<int, 4> top = peg_tops(n, code);
      for (int from = 0; from < 4; ++from) {
        if (top[from] == 0) continue;
        for (int to = 0; to < 4; ++to) {
          if (to == from || (top[to] != 0 && top[to] < top[from])) continue;
          const StateCode sc = flipped(code, top[from], from, to);
          const std::uint16_t mark = seen.get(sc);
          if (mark == 0) {
            seen.put(sc, pack_mark(backward, (from << 2) | to, depth + 1));
            next.push_back(sc);
          } else if (mark_backward(mark) != backward) {
            // Touched the other search: a full path exists through sc.
            const std::uint64_t total =
                static_cast<std::uint64_t>(depth) + 1 + mark_depth(mark);
            if (total < best) {
              best = total;
              best_pred = code;
              best_meet = sc;
              best_move = (from << 2) | to;
            }
          }
        }
      }
    }

    if (best != std::numeric_limits<std::uint64_t>::max()) {
      // Finish the level before concluding (done: loops above ran fully),
      // then stitch start -> pred/meet -> goal.
      BfsResult res;
      res.length = best;
      const int from = best_move >> 2, to = best_move & 3;
      if (!backward) {
        unwind_forward(seen, n, best_pred, res.witness);
        res.witness.push_back({from + 1, to + 1});
        unwind_backward(seen, n, best_meet, res.witness);
      } else {
        unwind_forward(seen, n, best_meet, res.witness);
        res.witness.push_back({to + 1, from + 1});
        unwind_backward(seen, n, best_pred, res.witness);
      }
      return res;
    }

    if (next.empty())
      throw std::logic_error("bfs_optimal: search space exhausted unexpectedly");
    frontier = std::move(next);
    (backward ? bwd_depth : fwd_depth) = depth + 1;
  }
}

std::uint64_t frame_stewart_number(int n) {
  if (n < 0 || n > 63)
    throw std::invalid_argument("frame_stewart_number: n outside 0..63");
  static std::mutex mu;
  static std::vector<std::uint64_t> memo{0};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size());
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (int k = 0; k < m; ++k) {
      const std::uint64_t v =
          2 * memo[static_cast<std::size_t>(k)] + ((1ull << (m - k)) - 1);
      best = std::min(best, v);
    }
    memo.push_back(best);
  }
  return memo[static_cast<std::size_t>(n)];
}

std::vector<int> frame_stewart_argmin(int n) {
  if (n < 0 || n > 63)
    throw std::invalid_argument("frame_stewart_argmin: n outside 0..63");
  std::vector<int> ks;
  if (n == 0) return ks;
  const std::uint64_t target = frame_stewart_number(n);
  for (int k = 0; k < n; ++k) {
    if (2 * frame_stewart_number(k) + ((1ull << (n - k)) - 1) == target)
      ks.push_back(k);
  }
  return ks;
}

std::uint64_t three_peg_number(int n) {
  if (n < 0 || n > 63)
    throw std::invalid_argument("three_peg_number: n outside 0..63");
  return (1ull << n) - 1;
}

}  // namespace hanoi
