#include "hanoi/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "hanoi/oracle.hpp"
#include "hanoi/state_code.hpp"

namespace hanoi {
namespace {

struct Fact {
  std::string name;
  std::vector<std::uint64_t> args;
  int line = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view tok, int line) {
  tok = trim(tok);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.begin(), tok.end(), v);
  if (ec != std::errc{} || ptr != tok.end() || tok.empty())
    throw ParseError("expected a non-negative integer, got '" +
                         std::string(tok) + "'",
                     line);
  return v;
}

// One fact body without its terminating '.', e.g. "on0(5, 1)".
Fact parse_fact_body(std::string_view raw, int line) {
  const auto open = raw.find('(');
  const auto close = raw.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close < open)
    throw ParseError("malformed fact (expected name(arg,...).)", line);
  if (!trim(raw.substr(close + 1)).empty())
    throw ParseError("trailing characters after fact", line);

  Fact f;
  f.name = std::string(trim(raw.substr(0, open)));
  f.line = line;
  std::string_view args = raw.substr(open + 1, close - open - 1);
  while (true) {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      f.args.push_back(parse_uint(args, line));
      break;
    }
    f.args.push_back(parse_uint(args.substr(0, comma), line));
    args.remove_prefix(comma + 1);
  }
  return f;
}

void expect_arity(const Fact& f, std::size_t want) {
  if (f.args.size() != want)
    throw ParseError(f.name + " expects " + std::to_string(want) +
                         " argument(s)",
                     f.line);
}

// Builds one side (on0 or ongoal) from its support facts.  Wire ids: pegs
// are 1..4, disks 5..max_id; internal rank = n + 5 - wire_id.
Configuration build_side(const std::vector<Fact>& facts, int n,
                         const std::string& pred) {
  const int max_id = n + 4;
  std::map<int, int> above;       // base id -> disk id directly on it
  std::map<int, int> placed_on;   // disk id -> base id
  for (const Fact& f : facts) {
    const auto a = static_cast<long long>(f.args[0]);
    const auto b = static_cast<long long>(f.args[1]);
    if (a < 5 || a > max_id)
      throw ParseError(pred + "(" + std::to_string(a) + ",...): first argument must be a disk id in 5.." +
                           std::to_string(max_id),
                       f.line);
    if (b < 1 || b > max_id)
      throw ParseError(pred + ": disk " + std::to_string(a) +
                           " rests on undeclared id " + std::to_string(b),
                       f.line);
    if (a == b)
      throw ParseError(pred + ": disk " + std::to_string(a) +
                           " rests on itself",
                       f.line);
    if (placed_on.count(static_cast<int>(a)))
      throw ParseError(pred + ": disk " + std::to_string(a) +
                           " is placed twice",
                       f.line);
    if (above.count(static_cast<int>(b)))
      throw ParseError(pred + ": two disks rest directly on id " +
                           std::to_string(b),
                       f.line);
    placed_on[static_cast<int>(a)] = static_cast<int>(b);
    above[static_cast<int>(b)] = static_cast<int>(a);
  }
  for (int d = 5; d <= max_id; ++d) {
    if (!placed_on.count(d))
      throw ParseError(pred + ": disk " + std::to_string(d) +
                           " has no support fact");
  }

  Configuration c;
  int reached = 0;
  for (PegId p = 1; p <= kPegCount; ++p) {
    auto it = above.find(p);
    while (it != above.end()) {
      const int wire = it->second;
      c.peg(p).push_back(n + 5 - wire);
      ++reached;
      it = above.find(wire);
    }
  }
  if (reached < n) {
    // Every disk has a valid support yet some never connect to a peg.
    for (int d = 5; d <= max_id; ++d) {
      bool found = false;
      for (PegId p = 1; p <= kPegCount; ++p)
        for (int r : c.peg(p)) found |= (r == n + 5 - d);
      if (!found)
        throw ParseError(pred + ": support chain of disk " + std::to_string(d) +
                         " forms a cycle");
    }
  }
  const ConfigCheck check = validate_configuration(c);
  if (!check.ok())
    throw ParseError(pred + " describes an invalid position: " +
                     check.message());
  return c;
}

std::uint64_t checked_ceil_budget(double margin, std::uint64_t base) {
  const double raw = std::ceil(margin * static_cast<double>(base));
  return static_cast<std::uint64_t>(raw);
}

}  // namespace

ParseError::ParseError(const std::string& msg, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                  : msg),
      line_(line) {}

Instance parse_instance(std::string_view text,
                        std::vector<std::string>* warnings) {
  std::optional<std::uint64_t> step;
  std::vector<std::uint64_t> times;
  std::vector<std::uint64_t> disks;
  std::vector<Fact> on0, ongoal;

  const auto handle = [&](const Fact& f) {
    if (f.name == "step") {
      expect_arity(f, 1);
      if (step) throw ParseError("duplicate step fact", f.line);
      step = f.args[0];
    } else if (f.name == "time") {
      expect_arity(f, 1);
      times.push_back(f.args[0]);
    } else if (f.name == "disk") {
      expect_arity(f, 1);
      disks.push_back(f.args[0]);
    } else if (f.name == "on0") {
      expect_arity(f, 2);
      on0.push_back(f);
    } else if (f.name == "ongoal") {
      expect_arity(f, 2);
      ongoal.push_back(f);
    } else {
      throw ParseError("unknown predicate '" + f.name + "'", f.line);
    }
  };

  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    // Comments run from '%' to end of line; several facts may share a line.
    if (const auto cpos = raw.find('%'); cpos != std::string_view::npos)
      raw = raw.substr(0, cpos);
    std::string_view rest = trim(raw);
    while (!rest.empty()) {
      const auto dot = rest.find('.');
      if (dot == std::string_view::npos)
        throw ParseError("fact does not end with '.'", line);
      handle(parse_fact_body(trim(rest.substr(0, dot)), line));
      rest = trim(rest.substr(dot + 1));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  if (!step) throw ParseError("missing step fact");

  // disk facts must cover exactly 1..n+4 (pegs plus disks).
  std::sort(disks.begin(), disks.end());
  disks.erase(std::unique(disks.begin(), disks.end()), disks.end());
  if (disks.size() < 4 || disks.front() != 1 || disks.back() != disks.size())
    throw ParseError("disk facts must cover exactly 1..n+4");
  const int n = static_cast<int>(disks.size()) - 4;
  if (n > kMaxCodedDisks)
    throw ParseError("instance has more than " +
                     std::to_string(kMaxCodedDisks) + " disks");

  Instance inst;
  inst.disk_count = n;
  inst.max_steps = *step;
  inst.start = build_side(on0, n, "on0");
  inst.goal = build_side(ongoal, n, "ongoal");

  if (warnings) {
    // Exactly the frames 0..step: right count, distinct, right endpoints.
    std::sort(times.begin(), times.end());
    const bool frames_ok =
        !times.empty() && times.size() == *step + 1 && times.front() == 0 &&
        times.back() == *step &&
        std::adjacent_find(times.begin(), times.end()) == times.end();
    if (!frames_ok)
      warnings->push_back("time facts do not cover 0.." +
                          std::to_string(*step) + " exactly");
  }
  return inst;
}

std::string emit_instance(const Instance& inst) {
  const int n = inst.disk_count;
  std::ostringstream os;
  os << "step(" << inst.max_steps << ").\n";
  for (std::uint64_t t = 0; t <= inst.max_steps; ++t)
    os << "time(" << t << ").\n";
  for (int d = 1; d <= n + 4; ++d) os << "disk(" << d << ").\n";
  const auto side = [&](const Configuration& c, const char* pred) {
    for (PegId p = 1; p <= kPegCount; ++p) {
      int base = p;  // wire id of the support below the next disk
      for (const Disk r : c.peg(p)) {
        const int wire = n + 5 - r;
        os << pred << "(" << wire << "," << base << ").\n";
        base = wire;
      }
    }
  };
  side(inst.start, "on0");
  side(inst.goal, "ongoal");
  return os.str();
}

Instance random_instance(int n, std::uint64_t seed, double margin) {
  if (n < 0 || n > kMaxCodedDisks)
    throw std::invalid_argument("random_instance: n outside 0..32");
  if (!(margin > 0))
    throw std::invalid_argument("random_instance: margin must be positive");
  std::mt19937_64 rng(seed);
  const auto draw = [&rng, n] {
    Configuration c;
    for (Disk d = n; d >= 1; --d)
      c.pegs[rng() & 3].push_back(d);
    return c;
  };
  Instance inst;
  inst.disk_count = n;
  inst.start = draw();
  inst.goal = draw();
  inst.max_steps = checked_ceil_budget(margin, frame_stewart_number(n));
  inst.source_name = "random(n=" + std::to_string(n) +
                     ",seed=" + std::to_string(seed) + ")";
  return inst;
}

Instance classic_instance(int n) {
  if (n < 0 || n > kMaxCodedDisks)
    throw std::invalid_argument("classic_instance: n outside 0..32");
  Instance inst;
  inst.disk_count = n;
  inst.start = full_tower(n, 1);
  inst.goal = full_tower(n, kPegCount);
  inst.max_steps = frame_stewart_number(n);
  inst.source_name = "classic-" + std::to_string(n);
  return inst;
}

std::string emit_plan(const Plan& plan, const Instance& inst) {
  const PlanCheck check = validate_plan(inst.start, inst.goal, plan);
  if (!check.ok())
    throw std::invalid_argument("emit_plan: refusing an invalid plan: " +
                                check.message());
  std::ostringstream os;
  for (std::size_t i = 0; i < plan.size(); ++i)
    os << "move(" << i + 1 << "," << plan[i].from << "," << plan[i].to
       << ").\n";
  os << "len(" << plan.size() << ").\n";
  return os.str();
}

}  // namespace hanoi
