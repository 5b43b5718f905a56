#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hanoi/config.hpp"

namespace hanoi {

// A problem statement: get from start to goal within max_steps moves.
struct Instance {
  int disk_count = 0;
  std::uint64_t max_steps = 0;
  Configuration start;
  Configuration goal;
  std::string source_name;  // provenance label, not part of equality

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.disk_count == b.disk_count && a.max_steps == b.max_steps &&
           a.start == b.start && a.goal == b.goal;
  }
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, int line = 0);
  // 1-based source line; 0 for whole-file problems.
  int line() const { return line_; }

 private:
  int line_;
};

// Reads the fact format (see docs/formats.md): step/1, time/1, disk/1,
// on0/2, ongoal/2 facts in any order, '%' comments.  Disk ids on the wire
// are 5..n+4 with larger ids meaning smaller disks; pegs are 1..4.
// Structural problems throw ParseError; a time frame set that does not match
// step is only appended to *warnings (when provided).
Instance parse_instance(std::string_view text,
                        std::vector<std::string>* warnings = nullptr);

// Canonical emission; parse_instance(emit_instance(i)) == i.
std::string emit_instance(const Instance& inst);

// Reproducible scramble: pegs drawn with rng() & 3 from mt19937_64(seed),
// all start positions first, then all goal positions, largest disk first.
// Budget: ceil(margin * frame_stewart_number(n)).
inline constexpr double kDefaultStepsMargin = 2.0;
Instance random_instance(int n, std::uint64_t seed,
                         double margin = kDefaultStepsMargin);

// Tower on peg 1 to tower on peg 4, budget exactly frame_stewart_number(n).
Instance classic_instance(int n);

// Plan text: move(T,From,To). lines (T from 1) plus a final len(L). fact.
// Refuses (std::invalid_argument) plans that do not replay start to goal.
std::string emit_plan(const Plan& plan, const Instance& inst);

}  // namespace hanoi
