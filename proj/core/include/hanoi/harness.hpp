#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hanoi/instance_io.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/plan4.hpp"

namespace hanoi {

// Process exit codes shared by the command line tool and its tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // CLI11 reports its own parse failures
inline constexpr int kExitParseError = 2;
inline constexpr int kExitUnknown = 3;
inline constexpr int kExitOverBound = 4;
inline constexpr int kExitResourceLimit = 5;
inline constexpr int kExitVerifyFailed = 6;

struct SolveSettings {
  PartitionHeuristic heuristic = PartitionHeuristic::kRohlGedeon;
  int error_bound = 2;
  std::size_t memo_cap = 0;    // entries, 0 = unlimited
  double timeout_seconds = 0;  // 0 = none
};

// One solve with a fresh memo table, timed and measured.
struct SolveReport {
  SolveOutcome outcome;
  double seconds = 0;  // wall clock around the solve only
  std::size_t memo_entries = 0;
  std::size_t memo_bytes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_misses = 0;
};

SolveReport solve_instance(const Instance& inst, const SolveSettings& s);

// Aggregates for one heuristic over an instance list.
struct BenchmarkRow {
  std::string heuristic;
  int error_bound = 0;
  double avg_seconds = 0;
  double max_seconds = 0;
  double avg_memo_entries = 0;
  std::size_t max_memo_entries = 0;
  double avg_memo_bytes = 0;
  int solved = 0;
  int unknown = 0;
  int over_bound = 0;
  int resource_limit = 0;
};

// Every heuristic over the same instances, fresh memo per solve.  Per-solve
// failures land in the outcome tallies; the sweep itself never aborts.
// base.heuristic is ignored.
std::vector<BenchmarkRow> run_bench(
    const std::vector<Instance>& instances,
    const std::vector<PartitionHeuristic>& heuristics,
    const SolveSettings& base);

std::string format_rows_csv(const std::vector<BenchmarkRow>& rows);
std::string format_rows_json(const std::vector<BenchmarkRow>& rows);

// Classic-tower audit: all heuristics at error bound 0 against
// frame_stewart_number for n = 1..max_n with plans replayed, plus
// bfs_optimal cross-checks where n <= bfs_cap.
struct ClassicCheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct ClassicVerification {
  std::vector<ClassicCheckLine> lines;
  bool all_pass = true;
};

ClassicVerification verify_classic(int max_n, int bfs_cap = kDefaultBfsCap);

// Two settings side by side on the same seeded random instances.
struct PairedRun {
  std::string name;
  int n = 0;
  std::uint64_t seed = 0;       // per-instance generator seed
  std::uint64_t max_steps = 0;
  SolveReport first;
  SolveReport second;
};

struct RandomExperiment {
  SolveSettings first;
  SolveSettings second;
  std::vector<PairedRun> runs;
};

// Instance i draws its disk count as n_min + rng() % span and then a fresh
// seed from the same mt19937_64(seed) stream.
RandomExperiment run_random_experiment(int count, int n_min, int n_max,
                                       std::uint64_t seed,
                                       const SolveSettings& first,
                                       const SolveSettings& second);

std::string format_random_csv(const RandomExperiment& e);
std::string format_random_json(const RandomExperiment& e);

}  // namespace hanoi
