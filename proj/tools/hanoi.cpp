// Command line front end: solve single instances, run benchmark sweeps,
// audit the classic towers, race two heuristics on random scrambles, and
// query the exact oracles.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hanoi/harness.hpp"
#include "hanoi/plan3.hpp"

namespace {

using namespace hanoi;

const std::vector<std::string> kHeuristicTokens = {
    "rand",           "liefvoort",       "rohl-gedeon", "tri-smallest-geq",
    "tri-largest-leq", "stockmeyer",     "exhaustive"};

struct CommonOpts {
  int error_bound = 2;
  std::size_t memo_cap = 0;
  double timeout_seconds = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--error-bound", o.error_bound,
                  "Half-width of the split window around each estimate")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  cmd->add_option("--memo-cap", o.memo_cap,
                  "Abort a solve once the memo holds this many entries (0 = unlimited)")
      ->capture_default_str();
  cmd->add_option("--timeout", o.timeout_seconds,
                  "Per-solve wall clock budget in seconds (0 = none)")
      ->capture_default_str();
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// Loads and validates an instance file; throws ParseError on bad input.
Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> warnings;
  Instance inst = parse_instance(buf.str(), &warnings);
  inst.source_name = path;
  for (const std::string& w : warnings)
    std::cerr << "warning: " << path << ": " << w << "\n";
  return inst;
}

void print_solve_summary(const SolveReport& r, std::uint64_t budget) {
  std::ostream& os = std::cerr;
  os << to_string(r.outcome.status);
  if (r.outcome.status == SolveStatus::kSolved ||
      r.outcome.status == SolveStatus::kOverBound)
    os << ": len=" << r.outcome.length << " budget=" << budget;
  if (r.outcome.status == SolveStatus::kResourceLimit)
    os << ": " << to_string(r.outcome.limit);
  os << " | memo entries=" << r.memo_entries << " bytes=" << r.memo_bytes
     << " hits=" << r.memo_hits << " misses=" << r.memo_misses << " | "
     << r.seconds << "s\n";
}

int exit_code_for(const SolveOutcome& out) {
  switch (out.status) {
    case SolveStatus::kSolved: return kExitOk;
    case SolveStatus::kUnknown: return kExitUnknown;
    case SolveStatus::kOverBound: return kExitOverBound;
    case SolveStatus::kResourceLimit: return kExitResourceLimit;
  }
  return kExitUsage;
}

// --- solve ---------------------------------------------------------------

struct SolveCmd {
  std::string instance_path;
  int classic_n = -1;
  std::uint64_t max_steps = 0;
  bool has_max_steps = false;
  std::string heuristic = "rohl-gedeon";
  CommonOpts common;
  std::string out_path;
};

int run_solve(const SolveCmd& c) {
  Instance inst;
  try {
    inst = c.classic_n >= 0 ? classic_instance(c.classic_n)
                            : load_instance(c.instance_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  if (c.has_max_steps) inst.max_steps = c.max_steps;

  SolveSettings s;
  s.heuristic = *heuristic_from_name(c.heuristic);
  s.error_bound = c.common.error_bound;
  s.memo_cap = c.common.memo_cap;
  s.timeout_seconds = c.common.timeout_seconds;

  const SolveReport r = solve_instance(inst, s);
  print_solve_summary(r, inst.max_steps);
  if (r.outcome.status == SolveStatus::kSolved ||
      r.outcome.status == SolveStatus::kOverBound) {
    const int rc = write_text(c.out_path, emit_plan(r.outcome.plan, inst));
    if (rc != kExitOk) return rc;
  } else if (r.outcome.status == SolveStatus::kUnknown) {
    std::cerr << "no candidate split chain reaches the goal; widen "
                 "--error-bound or use --heuristic exhaustive\n";
  }
  return exit_code_for(r.outcome);
}

// --- bench ---------------------------------------------------------------

struct BenchCmd {
  std::vector<std::string> instance_paths;
  int classic_sweep = 0;
  int random_count = 0;
  int n_min = 4;
  int n_max = 8;
  std::uint64_t seed = 1;
  std::vector<std::string> heuristics;
  CommonOpts common;
  std::string format = "csv";
  std::string out_path;
};

int run_bench_cmd(const BenchCmd& c) {
  std::vector<Instance> instances;
  try {
    for (const std::string& p : c.instance_paths)
      instances.push_back(load_instance(p));
    for (int n = 1; n <= c.classic_sweep; ++n)
      instances.push_back(classic_instance(n));
    if (c.random_count > 0) {
      std::mt19937_64 rng(c.seed);
      const auto span = static_cast<std::uint64_t>(c.n_max - c.n_min) + 1;
      for (int i = 0; i < c.random_count; ++i) {
        const int n = c.n_min + static_cast<int>(rng() % span);
        instances.push_back(random_instance(n, rng()));
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  if (instances.empty()) {
    std::cerr << "error: no instances (use --instance, --classic-sweep or --random)\n";
    return kExitUsage;
  }

  std::vector<PartitionHeuristic> hs;
  if (c.heuristics.empty()) {
    hs.assign(kGuidedHeuristics.begin(), kGuidedHeuristics.end());
  } else {
    for (const std::string& t : c.heuristics) hs.push_back(*heuristic_from_name(t));
  }

  SolveSettings base;
  base.error_bound = c.common.error_bound;
  base.memo_cap = c.common.memo_cap;
  base.timeout_seconds = c.common.timeout_seconds;

  const std::vector<BenchmarkRow> rows = run_bench(instances, hs, base);
  return write_text(c.out_path, c.format == "json" ? format_rows_json(rows)
                                                   : format_rows_csv(rows));
}

// --- verify-classic ------------------------------------------------------

int run_verify(int max_n, int bfs_cap) {
  const ClassicVerification v = verify_classic(max_n, bfs_cap);
  for (const ClassicCheckLine& line : v.lines)
    std::cout << (line.pass ? "PASS " : "FAIL ") << line.label << " "
              << line.detail << "\n";
  std::cout << (v.all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  return v.all_pass ? kExitOk : kExitVerifyFailed;
}

// --- random --------------------------------------------------------------

struct RandomCmd {
  int count = 20;
  int n_min = 18;
  int n_max = 25;
  std::uint64_t seed = 1;
  CommonOpts common{2, 4000000, 0};  // cap by default: exhaustive gets large
  std::string format = "csv";
  std::string out_path;
};

int run_random_cmd(const RandomCmd& c) {
  SolveSettings first;
  first.heuristic = PartitionHeuristic::kRohlGedeon;
  first.error_bound = c.common.error_bound;
  first.memo_cap = c.common.memo_cap;
  first.timeout_seconds = c.common.timeout_seconds;
  SolveSettings second = first;
  second.heuristic = PartitionHeuristic::kExhaustive;
  second.error_bound = 0;

  const RandomExperiment e =
      run_random_experiment(c.count, c.n_min, c.n_max, c.seed, first, second);
  return write_text(c.out_path, c.format == "json" ? format_random_json(e)
                                                   : format_random_csv(e));
}

// --- oracle --------------------------------------------------------------

struct OracleCmd {
  int classic_n = -1;
  std::string instance_path;
  int cap = kDefaultBfsCap;
  std::string out_path;
};

int run_oracle(const OracleCmd& c) {
  if (c.classic_n >= 0) {
    std::cout << "n=" << c.classic_n
              << " frame-stewart=" << frame_stewart_number(c.classic_n);
    std::cout << " argmin-k=";
    const std::vector<int> ks = frame_stewart_argmin(c.classic_n);
    for (std::size_t i = 0; i < ks.size(); ++i)
      std::cout << (i ? "," : "") << ks[i];
    std::cout << " three-peg=" << three_peg_number(c.classic_n) << "\n";
    return kExitOk;
  }
  Instance inst;
  try {
    inst = load_instance(c.instance_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  try {
    const BfsResult r = bfs_optimal(inst.start, inst.goal, c.cap);
    std::cout << "optimal=" << r.length << "\n";
    if (!c.out_path.empty()) return write_text(c.out_path, emit_plan(r.witness, inst));
  } catch (const BfsCapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-peg Tower of Hanoi solver toolkit"};
  app.set_version_flag("--version", "hanoi 1.0.0");
  app.require_subcommand(1);

  SolveCmd solve_cmd;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance and emit its plan");
  auto* si = solve->add_option("--instance", solve_cmd.instance_path,
                               "Instance file in the fact format")
                 ->check(CLI::ExistingFile);
  auto* sc = solve->add_option("--classic", solve_cmd.classic_n,
                               "Classic n-disk tower, peg 1 to peg 4")
                 ->check(CLI::Range(0, 32));
  si->excludes(sc);
  sc->excludes(si);
  auto* sm = solve->add_option("--max-steps", solve_cmd.max_steps,
                               "Override the instance step budget");
  solve->add_option("--heuristic", solve_cmd.heuristic, "Partition heuristic")
      ->check(CLI::IsMember(kHeuristicTokens))
      ->capture_default_str();
  add_common(solve, solve_cmd.common);
  solve->add_option("--out", solve_cmd.out_path, "Plan output file (default stdout)");

  BenchCmd bench_cmd;
  CLI::App* bench = app.add_subcommand("bench", "Benchmark heuristics over an instance list");
  bench->add_option("--instance", bench_cmd.instance_paths, "Instance file (repeatable)")
      ->check(CLI::ExistingFile);
  bench->add_option("--classic-sweep", bench_cmd.classic_sweep,
                    "Add classic towers n=1..N")
      ->check(CLI::Range(0, 32));
  bench->add_option("--random", bench_cmd.random_count, "Add N random scrambles");
  bench->add_option("--n-min", bench_cmd.n_min, "Smallest random disk count")
      ->check(CLI::Range(0, 32))
      ->capture_default_str();
  bench->add_option("--n-max", bench_cmd.n_max, "Largest random disk count")
      ->check(CLI::Range(0, 32))
      ->capture_default_str();
  bench->add_option("--seed", bench_cmd.seed, "Random scramble seed")
      ->capture_default_str();
  bench->add_option("--heuristic", bench_cmd.heuristics,
                    "Heuristic to include (repeatable; default: the six guided ones)")
      ->check(CLI::IsMember(kHeuristicTokens));
  add_common(bench, bench_cmd.common);
  bench->add_option("--format", bench_cmd.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench->add_option("--out", bench_cmd.out_path, "Report file (default stdout)");

  int verify_max_n = 30;
  int verify_bfs_cap = kDefaultBfsCap;
  CLI::App* verify = app.add_subcommand(
      "verify-classic", "Check classic towers against the exact oracles");
  verify->add_option("--max-n", verify_max_n, "Check n=1..N")
      ->check(CLI::Range(1, 32))
      ->capture_default_str();
  verify->add_option("--bfs-cap", verify_bfs_cap,
                     "Cross-check breadth-first search up to this n")
      ->check(CLI::Range(0, kMaxBfsDisks))
      ->capture_default_str();

  RandomCmd random_cmd;
  CLI::App* random = app.add_subcommand(
      "random", "Race rohl-gedeon against exhaustive on random scrambles");
  random->add_option("--count", random_cmd.count, "Number of scrambles")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  random->add_option("--n-min", random_cmd.n_min, "Smallest disk count")
      ->check(CLI::Range(0, 32))
      ->capture_default_str();
  random->add_option("--n-max", random_cmd.n_max, "Largest disk count")
      ->check(CLI::Range(0, 32))
      ->capture_default_str();
  random->add_option("--seed", random_cmd.seed, "Experiment seed")
      ->capture_default_str();
  add_common(random, random_cmd.common);
  random->add_option("--format", random_cmd.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  random->add_option("--out", random_cmd.out_path, "Report file (default stdout)");

  OracleCmd oracle_cmd;
  CLI::App* oracle = app.add_subcommand("oracle", "Exact reference answers");
  auto* oc = oracle->add_option("--classic", oracle_cmd.classic_n,
                                "Report counts for the classic n-disk tower")
                 ->check(CLI::Range(0, 63));
  auto* oi = oracle->add_option("--instance", oracle_cmd.instance_path,
                                "Exact optimum for an instance file (breadth-first search)")
                 ->check(CLI::ExistingFile);
  oc->excludes(oi);
  oi->excludes(oc);
  oracle->add_option("--cap", oracle_cmd.cap, "Disk-count cap for the search")
      ->check(CLI::Range(0, kMaxBfsDisks))
      ->capture_default_str();
  oracle->add_option("--out", oracle_cmd.out_path, "Write the witness plan here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      if (solve_cmd.instance_path.empty() && solve_cmd.classic_n < 0) {
        std::cerr << "error: solve needs --instance or --classic\n";
        return kExitUsage;
      }
      solve_cmd.has_max_steps = sm->count() > 0;
      return run_solve(solve_cmd);
    }
    if (bench->parsed()) return run_bench_cmd(bench_cmd);
    if (verify->parsed()) return run_verify(verify_max_n, verify_bfs_cap);
    if (random->parsed()) return run_random_cmd(random_cmd);
    if (oracle->parsed()) {
      if (oracle_cmd.instance_path.empty() && oracle_cmd.classic_n < 0) {
        std::cerr << "error: oracle needs --instance or --classic\n";
        return kExitUsage;
      }
      return run_oracle(oracle_cmd);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
