#include "hanoi/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hanoi/plan3.hpp"

namespace hanoi {
namespace {

using Clock = std::chrono::steady_clock;

SolveLimits make_limits(const SolveSettings& s) {
  SolveLimits limits;
  limits.max_memo_entries = s.memo_cap;
  if (s.timeout_seconds > 0)
    limits.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(
                                             s.timeout_seconds));
  return limits;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

nlohmann::ordered_json row_json(const BenchmarkRow& r) {
  return {
      {"heuristic", r.heuristic},
      {"error_bound", r.error_bound},
      {"avg_seconds", r.avg_seconds},
      {"max_seconds", r.max_seconds},
      {"avg_memo_entries", r.avg_memo_entries},
      {"max_memo_entries", r.max_memo_entries},
      {"avg_memo_bytes", r.avg_memo_bytes},
      {"solved", r.solved},
      {"unknown", r.unknown},
      {"over_bound", r.over_bound},
      {"resource_limit", r.resource_limit},
  };
}

nlohmann::ordered_json side_json(const SolveReport& r) {
  nlohmann::ordered_json j = {
      {"status", std::string(to_string(r.outcome.status))},
      {"seconds", r.seconds},
      {"memo_entries", r.memo_entries},
  };
  if (r.outcome.status == SolveStatus::kSolved ||
      r.outcome.status == SolveStatus::kOverBound)
    j["length"] = r.outcome.length;
  return j;
}

}  // namespace

SolveReport solve_instance(const Instance& inst, const SolveSettings& s) {
  SolveReport report;
  MemoTable memo;
  const SolveLimits limits = make_limits(s);
  const auto t0 = Clock::now();
  report.outcome = solve_with_bound(inst.start, inst.goal, inst.max_steps,
                                    s.heuristic, s.error_bound, memo, limits);
  report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  report.memo_entries = memo.entry_count();
  report.memo_bytes = memo.approx_bytes();
  report.memo_hits = memo.hits;
  report.memo_misses = memo.misses;
  return report;
}

std::vector<BenchmarkRow> run_bench(
    const std::vector<Instance>& instances,
    const std::vector<PartitionHeuristic>& heuristics,
    const SolveSettings& base) {
  std::vector<BenchmarkRow> rows;
  rows.reserve(heuristics.size());
  for (const PartitionHeuristic h : heuristics) {
    SolveSettings s = base;
    s.heuristic = h;
    BenchmarkRow row;
    row.heuristic = std::string(heuristic_name(h));
    row.error_bound = s.error_bound;
    double total_seconds = 0, total_entries = 0, total_bytes = 0;
    for (const Instance& inst : instances) {
      SolveReport r;
      try {
        r = solve_instance(inst, s);
      } catch (const std::exception& e) {
        // Defensive: a malformed instance must not sink the whole sweep.
        std::cerr << "bench: " << inst.source_name << " under "
                  << row.heuristic << ": " << e.what() << "\n";
        ++row.unknown;
        continue;
      }
      total_seconds += r.seconds;
      total_entries += static_cast<double>(r.memo_entries);
      total_bytes += static_cast<double>(r.memo_bytes);
      row.max_seconds = std::max(row.max_seconds, r.seconds);
      row.max_memo_entries = std::max(row.max_memo_entries, r.memo_entries);
      switch (r.outcome.status) {
        case SolveStatus::kSolved: ++row.solved; break;
        case SolveStatus::kUnknown: ++row.unknown; break;
        case SolveStatus::kOverBound: ++row.over_bound; break;
        case SolveStatus::kResourceLimit: ++row.resource_limit; break;
      }
    }
    if (!instances.empty()) {
      const auto count = static_cast<double>(instances.size());
      row.avg_seconds = total_seconds / count;
      row.avg_memo_entries = total_entries / count;
      row.avg_memo_bytes = total_bytes / count;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_rows_csv(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream os;
  os << "heuristic,error_bound,avg_seconds,max_seconds,avg_memo_entries,"
        "max_memo_entries,avg_memo_bytes,solved,unknown,over_bound,"
        "resource_limit\n";
  for (const BenchmarkRow& r : rows) {
    os << r.heuristic << ',' << r.error_bound << ',' << fixed(r.avg_seconds, 6)
       << ',' << fixed(r.max_seconds, 6) << ',' << fixed(r.avg_memo_entries, 3)
       << ',' << r.max_memo_entries << ',' << fixed(r.avg_memo_bytes, 3) << ','
       << r.solved << ',' << r.unknown << ',' << r.over_bound << ','
       << r.resource_limit << '\n';
  }
  return os.str();
}

std::string format_rows_json(const std::vector<BenchmarkRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BenchmarkRow& r : rows) arr.push_back(row_json(r));
  return arr.dump(2) + "\n";
}

ClassicVerification verify_classic(int max_n, int bfs_cap) {
  ClassicVerification v;
  const auto add = [&v](std::string label, bool pass, std::string detail) {
    v.all_pass = v.all_pass && pass;
    v.lines.push_back({std::move(label), pass, std::move(detail)});
  };
  for (int n = 1; n <= max_n; ++n) {
    const Instance inst = classic_instance(n);
    const std::uint64_t want = frame_stewart_number(n);
    for (const PartitionHeuristic h : kAllHeuristics) {
      MemoTable memo;
      const SolveOutcome out =
          solve_with_bound(inst.start, inst.goal, inst.max_steps, h, 0, memo);
      const std::string label = "n=" + std::to_string(n) +
                                " heuristic=" + std::string(heuristic_name(h));
      if (!out.solved()) {
        add(label, false, "status=" + std::string(to_string(out.status)));
        continue;
      }
      const PlanCheck replay = validate_plan(inst.start, inst.goal, out.plan);
      const bool pass = out.length == want && replay.ok();
      std::string detail =
          "len=" + std::to_string(out.length) + " expected=" + std::to_string(want);
      if (!replay.ok()) detail += " replay=" + replay.message();
      add(label, pass, std::move(detail));
    }
  }
  for (int n = 1; n <= std::min(max_n, bfs_cap); ++n) {
    const Instance inst = classic_instance(n);
    const std::uint64_t want = frame_stewart_number(n);
    const BfsResult bfs = bfs_optimal(inst.start, inst.goal, bfs_cap);
    add("n=" + std::to_string(n) + " bfs-cross-check", bfs.length == want,
        "bfs=" + std::to_string(bfs.length) +
            " expected=" + std::to_string(want));
  }
  return v;
}

RandomExperiment run_random_experiment(int count, int n_min, int n_max,
                                       std::uint64_t seed,
                                       const SolveSettings& first,
                                       const SolveSettings& second) {
  if (count < 0 || n_min < 0 || n_min > n_max || n_max > kMaxCodedDisks)
    throw std::invalid_argument("run_random_experiment: bad range");
  RandomExperiment e{first, second, {}};
  e.runs.reserve(static_cast<std::size_t>(count));
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(n_max - n_min) + 1;
  for (int i = 0; i < count; ++i) {
    const int n = n_min + static_cast<int>(rng() % span);
    const std::uint64_t inst_seed = rng();
    const Instance inst = random_instance(n, inst_seed);
    PairedRun run;
    run.name = "random-" + std::to_string(i);
    run.n = n;
    run.seed = inst_seed;
    run.max_steps = inst.max_steps;
    run.first = solve_instance(inst, first);
    run.second = solve_instance(inst, second);
    e.runs.push_back(std::move(run));
  }
  return e;
}

std::string format_random_csv(const RandomExperiment& e) {
  std::ostringstream os;
  os << "name,n,seed,max_steps,first_status,first_len,first_seconds,"
        "first_memo_entries,second_status,second_len,second_seconds,"
        "second_memo_entries\n";
  const auto len_or_dash = [](const SolveReport& r) -> std::string {
    if (r.outcome.status == SolveStatus::kSolved ||
        r.outcome.status == SolveStatus::kOverBound)
      return std::to_string(r.outcome.length);
    return "-";
  };
  for (const PairedRun& run : e.runs) {
    os << run.name << ',' << run.n << ',' << run.seed << ',' << run.max_steps
       << ',' << to_string(run.first.outcome.status) << ','
       << len_or_dash(run.first) << ',' << fixed(run.first.seconds, 6) << ','
       << run.first.memo_entries << ','
       << to_string(run.second.outcome.status) << ','
       << len_or_dash(run.second) << ',' << fixed(run.second.seconds, 6) << ','
       << run.second.memo_entries << '\n';
  }
  return os.str();
}

std::string format_random_json(const RandomExperiment& e) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const PairedRun& run : e.runs) {
    arr.push_back({
        {"name", run.name},
        {"n", run.n},
        {"seed", run.seed},
        {"max_steps", run.max_steps},
        {"first", side_json(run.first)},
        {"second", side_json(run.second)},
    });
  }
  return arr.dump(2) + "\n";
}

}  // namespace hanoi
