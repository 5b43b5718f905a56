// End-to-end checks of the installed command line tool: every subcommand is
// exercised through a real process, and the documented exit codes are pinned.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "hanoi/harness.hpp"

#ifndef WEXITSTATUS  // non-POSIX fallback; std::system already returns the code
#define WEXITSTATUS(x) (x)
#define WIFEXITED(x) 1
#endif

using namespace hanoi;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("hanoi_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  REQUIRE(out.good());
}

RunResult run(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(HANOI_CLI_PATH) + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  r.code = WEXITSTATUS(status);
  r.out = slurp_file(out);
  r.err = slurp_file(err);
  return r;
}

// The 13-disk pair whose split windows matter: reused across subcommands.
fs::path hard_pair_path() {
  static const fs::path p = [] {
    Instance inst;
    inst.disk_count = 13;
    inst.max_steps = 100;
    inst.start =
        make_configuration({13, 12}, {9, 8, 7, 6, 5, 4, 3, 2, 1}, {10}, {11});
    inst.goal =
        make_configuration({13, 12, 11, 10, 3, 2, 1}, {9, 8, 7, 6, 5, 4});
    const fs::path path = scratch_dir() / "hard_pair.lp";
    spit(path, emit_instance(inst));
    return path;
  }();
  return p;
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  int hits = 0;
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) ++hits;
  return hits;
}

}  // namespace

TEST_CASE("version and usage") {
  const RunResult v = run("--version");
  CHECK(v.code == 0);
  CHECK(v.out == "hanoi 1.0.0\n");

  CHECK(run("").code != 0);            // a subcommand is required
  CHECK(run("frobnicate").code != 0);  // unknown subcommand
  CHECK(run("solve").code == kExitUsage);  // needs --instance or --classic
  CHECK(run("solve --classic 2 --heuristic bogus").code != 0);
  CHECK(run("solve --instance /nonexistent.lp").code != 0);
  CHECK(run("solve --classic 2 --instance " + hard_pair_path().string()).code !=
        0);  // mutually exclusive
}

TEST_CASE("solve: classic tower to stdout and to a file") {
  const RunResult r = run("solve --classic 5");
  CHECK(r.code == kExitOk);
  CHECK(count_lines_starting(r.out, "move(") == 13);
  CHECK(r.out.find("len(13).\n") != std::string::npos);
  CHECK(r.err.find("solved: len=13 budget=13") != std::string::npos);

  const fs::path plan = scratch_dir() / "plan5.txt";
  const RunResult f = run("solve --classic 5 --out " + plan.string());
  CHECK(f.code == kExitOk);
  CHECK(f.out.empty());
  CHECK(slurp_file(plan) == r.out);
}

TEST_CASE("solve: budget overruns keep the plan but change the code") {
  const RunResult r = run("solve --classic 3 --max-steps 4");
  CHECK(r.code == kExitOverBound);
  CHECK(r.out.find("len(5).\n") != std::string::npos);
  CHECK(r.err.find("over-bound") != std::string::npos);
}

TEST_CASE("solve: narrow windows report unknown, wide ones succeed") {
  const std::string inst = hard_pair_path().string();
  const RunResult narrow =
      run("solve --instance " + inst + " --heuristic rand --error-bound 2");
  CHECK(narrow.code == kExitUnknown);
  CHECK(narrow.out.empty());
  CHECK(narrow.err.find("widen --error-bound") != std::string::npos);

  const RunResult wide =
      run("solve --instance " + inst + " --heuristic exhaustive");
  CHECK(wide.code == kExitOk);
  CHECK(wide.out.find("len(7).\n") != std::string::npos);
}

TEST_CASE("solve: resource limits") {
  CHECK(run("solve --classic 20 --memo-cap 10").code == kExitResourceLimit);
}

TEST_CASE("solve: malformed instance files exit with the parse code") {
  const fs::path bad = scratch_dir() / "bad.lp";
  spit(bad, "step(0).\nfoo(1).\n");
  const RunResult r = run("solve --instance " + bad.string());
  CHECK(r.code == kExitParseError);
  CHECK(r.err.find("unknown predicate 'foo'") != std::string::npos);
}

TEST_CASE("solve: time-frame gaps warn but do not fail") {
  const fs::path odd = scratch_dir() / "odd_times.lp";
  spit(odd,
       "step(1).\ndisk(1). disk(2). disk(3). disk(4). disk(5).\n"
       "on0(5,1). ongoal(5,2).\n");
  const RunResult r = run("solve --instance " + odd.string());
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("warning:") != std::string::npos);
  CHECK(r.out.find("len(1).\n") != std::string::npos);
}

TEST_CASE("verify-classic") {
  const RunResult r = run("verify-classic --max-n 6 --bfs-cap 4");
  CHECK(r.code == kExitOk);
  CHECK(count_lines_starting(r.out, "PASS ") == 6 * 7 + 4);
  CHECK(count_lines_starting(r.out, "FAIL ") == 0);
  CHECK(r.out.find("all checks passed\n") != std::string::npos);
}

TEST_CASE("oracle") {
  const RunResult c = run("oracle --classic 30");
  CHECK(c.code == kExitOk);
  CHECK(c.out ==
        "n=30 frame-stewart=1025 argmin-k=22,23 three-peg=1073741823\n");

  const fs::path two = scratch_dir() / "classic2.lp";
  spit(two, emit_instance(classic_instance(2)));
  const fs::path witness = scratch_dir() / "witness2.txt";
  const RunResult o =
      run("oracle --instance " + two.string() + " --out " + witness.string());
  CHECK(o.code == kExitOk);
  CHECK(o.out == "optimal=3\n");
  CHECK(slurp_file(witness).find("len(3).\n") != std::string::npos);

  // Capacity refusal: 13 disks against the default cap of 10.
  const RunResult big = run("oracle --instance " + hard_pair_path().string());
  CHECK(big.code == kExitParseError);

  CHECK(run("oracle").code == kExitUsage);
  CHECK(run("oracle --classic 3 --instance " + two.string()).code != 0);
}

TEST_CASE("bench") {
  const RunResult r =
      run("bench --classic-sweep 4 --heuristic rand --heuristic exhaustive");
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("heuristic,error_bound,", 0) == 0);
  CHECK(count_lines_starting(r.out, "rand,2,") == 1);
  CHECK(count_lines_starting(r.out, "exhaustive,2,") == 1);

  const RunResult j = run("bench --classic-sweep 3 --format json");
  CHECK(j.code == kExitOk);
  CHECK(j.out.rfind("[", 0) == 0);
  CHECK(j.out.find("\"heuristic\": \"rand\"") != std::string::npos);

  CHECK(run("bench").code == kExitUsage);  // no instances from any source
}

TEST_CASE("random") {
  const RunResult r = run("random --count 2 --n-min 3 --n-max 4 --seed 7");
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("name,n,seed,max_steps,", 0) == 0);
  CHECK(count_lines_starting(r.out, "random-") == 2);

  // Same seed, same instances: the non-timing columns agree across runs.
  const RunResult again =
      run("random --count 2 --n-min 3 --n-max 4 --seed 7 --format json");
  CHECK(again.code == kExitOk);
  CHECK(again.out.find("\"name\": \"random-0\"") != std::string::npos);
}
