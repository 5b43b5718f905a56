#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace hanoi {

inline constexpr int kPegCount = 4;

// Disk size rank. 1 is the smallest disk; a position over n disks uses each
// rank in {1..n} exactly once.
using Disk = int;

// Peg identifier, 1..4.
using PegId = int;

struct Move {
  PegId from = 0;
  PegId to = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

// A plan is an ordered move sequence; its length is moves.size().
using Plan = std::vector<Move>;

// Four stacks stored bottom-to-top.  Valid configurations are strictly
// decreasing upward on every peg and cover {1..n} with no repeats.
struct Configuration {
  std::array<std::vector<Disk>, kPegCount> pegs;

  const std::vector<Disk>& peg(PegId p) const { return pegs[p - 1]; }
  std::vector<Disk>& peg(PegId p) { return pegs[p - 1]; }

  int disk_count() const;
  bool empty() const { return disk_count() == 0; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Convenience builder for literals in tests and tools: stacks are given
// bottom-to-top, missing pegs are empty.
Configuration make_configuration(std::vector<Disk> p1,
                                 std::vector<Disk> p2 = {},
                                 std::vector<Disk> p3 = {},
                                 std::vector<Disk> p4 = {});

// n-disk tower sitting on one peg: [n, n-1, ..., 1].
Configuration full_tower(int n, PegId peg);

// --- validation ---------------------------------------------------------

struct ConfigCheck {
  enum class Kind { kOk, kDuplicateDisk, kMissingDisk, kOrderingViolation };

  Kind kind = Kind::kOk;
  PegId peg = 0;  // offending peg, 0 when not tied to one
  Disk disk = 0;  // offending disk rank

  bool ok() const { return kind == Kind::kOk; }
  std::string message() const;
};

// Scans pegs 1..4 bottom-to-top and reports the first offence.
ConfigCheck validate_configuration(const Configuration& c);

enum class MoveError {
  kNone,
  kSamePeg,         // from == to
  kBadPeg,          // peg id outside 1..4
  kEmptySource,     // nothing to pick up
  kLargerOnSmaller, // would bury a smaller disk
};

std::string to_string(MoveError e);

// Legality of one move against a configuration; kNone when legal.
MoveError check_move(const Configuration& c, Move m);

// Applies a legal move and returns the new configuration.  Illegal moves are
// caller bugs: throws std::logic_error.
Configuration apply_move(Configuration c, Move m);

struct PlanCheck {
  enum class Kind { kOk, kIllegalMove, kGoalMismatch };

  Kind kind = Kind::kOk;
  std::size_t move_index = 0;       // first illegal move (kIllegalMove only)
  MoveError move_error = MoveError::kNone;

  bool ok() const { return kind == Kind::kOk; }
  std::string message() const;
};

// Replays plan from start and demands it lands exactly on goal.
// Pre: start and goal are valid and hold the same number of disks.
PlanCheck validate_plan(const Configuration& start, const Configuration& goal,
                        const Plan& plan);

// --- decomposition helpers ----------------------------------------------

// If the largest disk rests at the bottom of the same peg in both positions,
// removes it from both and returns true.
bool strip_largest_in_place(Configuration& cur, Configuration& goal);

struct StripResult {
  Configuration cur;
  Configuration goal;
};

// Fixed point of strip_largest_in_place: drops every already-placed largest
// disk.  The remaining disk count is cur.disk_count().
StripResult strip_in_place(Configuration cur, Configuration goal);

// Keeps only disks <= mid (the top segments); peg ids are unchanged.
Configuration restrict_small(const Configuration& c, int mid);

// Keeps only disks > mid (the bottom segments) and renumbers them to
// {1..n-mid} by subtracting mid; peg ids are unchanged.
Configuration restrict_large(const Configuration& c, int mid);

// Peg whose bottom disk is d.  Throws std::logic_error when d is absent or
// not at the bottom of its peg.
PegId bottom_peg(const Configuration& c, Disk d);

// Rendering for logs and error messages:
//   peg1: 3 2 1
//   peg2:
//   ...
std::string to_text(const Configuration& c);

}  // namespace hanoi
