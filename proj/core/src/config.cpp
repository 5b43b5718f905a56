#include "hanoi/config.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hanoi {

int Configuration::disk_count() const {
  std::size_t n = 0;
  for (const auto& st : pegs) n += st.size();
  return static_cast<int>(n);
}

Configuration make_configuration(std::vector<Disk> p1, std::vector<Disk> p2,
                                 std::vector<Disk> p3, std::vector<Disk> p4) {
  Configuration c;
  c.pegs[0] = std::move(p1);
  c.pegs[1] = std::move(p2);
  c.pegs[2] = std::move(p3);
  c.pegs[3] = std::move(p4);
  return c;
}

Configuration full_tower(int n, PegId peg) {
  if (n < 0) throw std::logic_error("full_tower: negative disk count");
  if (peg < 1 || peg > kPegCount) throw std::logic_error("full_tower: bad peg");
  Configuration c;
  auto& st = c.peg(peg);
  st.reserve(static_cast<std::size_t>(n));
  for (Disk d = n; d >= 1; --d) st.push_back(d);
  return c;
}

std::string ConfigCheck::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kOk:
      os << "ok";
      break;
    case Kind::kDuplicateDisk:
      os << "disk " << disk << " appears more than once (second copy on peg "
         << peg << ")";
      break;
    case Kind::kMissingDisk:
      os << "disk " << disk << " is missing (sizes must cover 1..n)";
      break;
    case Kind::kOrderingViolation:
      os << "peg " << peg << " stacks disk " << disk
         << " on a disk that is not larger";
      break;
  }
  return os.str();
}

ConfigCheck validate_configuration(const Configuration& c) {
  const int n = c.disk_count();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (PegId p = 1; p <= kPegCount; ++p) {
    const auto& st = c.peg(p);
    for (std::size_t i = 0; i < st.size(); ++i) {
      const Disk d = st[i];
      if (i > 0 && st[i - 1] <= d)
        return {ConfigCheck::Kind::kOrderingViolation, p, d};
      if (d >= 1 && d <= n) {
        if (seen[static_cast<std::size_t>(d)])
          return {ConfigCheck::Kind::kDuplicateDisk, p, d};
        seen[static_cast<std::size_t>(d)] = 1;
      }
      // Out-of-range sizes leave some disk in 1..n uncovered; reported below.
    }
  }
  for (Disk d = 1; d <= n; ++d)
    if (!seen[static_cast<std::size_t>(d)])
      return {ConfigCheck::Kind::kMissingDisk, 0, d};
  return {};
}

std::string to_string(MoveError e) {
  switch (e) {
    case MoveError::kNone: return "legal";
    case MoveError::kSamePeg: return "source and target peg coincide";
    case MoveError::kBadPeg: return "peg id outside 1..4";
    case MoveError::kEmptySource: return "source peg is empty";
    case MoveError::kLargerOnSmaller: return "cannot place a disk on a smaller one";
  }
  return "unknown move error";
}

MoveError check_move(const Configuration& c, Move m) {
  if (m.from < 1 || m.from > kPegCount || m.to < 1 || m.to > kPegCount)
    return MoveError::kBadPeg;
  if (m.from == m.to) return MoveError::kSamePeg;
  const auto& src = c.peg(m.from);
  if (src.empty()) return MoveError::kEmptySource;
  const auto& dst = c.peg(m.to);
  if (!dst.empty() && dst.back() < src.back())
    return MoveError::kLargerOnSmaller;
  return MoveError::kNone;
}

Configuration apply_move(Configuration c, Move m) {
  const MoveError e = check_move(c, m);
  if (e != MoveError::kNone)
    throw std::logic_error("apply_move: " + to_string(e));
  auto& src = c.peg(m.from);
  c.peg(m.to).push_back(src.back());
  src.pop_back();
  return c;
}

std::string PlanCheck::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kOk:
      os << "ok";
      break;
    case Kind::kIllegalMove:
      os << "move " << move_index << " is illegal: " << to_string(move_error);
      break;
    case Kind::kGoalMismatch:
      os << "plan replays to a position different from the goal";
      break;
  }
  return os.str();
}

PlanCheck validate_plan(const Configuration& start, const Configuration& goal,
                        const Plan& plan) {
  Configuration cur = start;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const MoveError e = check_move(cur, plan[i]);
    if (e != MoveError::kNone)
      return {PlanCheck::Kind::kIllegalMove, i, e};
    auto& src = cur.peg(plan[i].from);
    cur.peg(plan[i].to).push_back(src.back());
    src.pop_back();
  }
  if (cur != goal) return {PlanCheck::Kind::kGoalMismatch, plan.size(), MoveError::kNone};
  return {};
}

bool strip_largest_in_place(Configuration& cur, Configuration& goal) {
  const int n = cur.disk_count();
  if (n == 0) return false;
  for (PegId p = 1; p <= kPegCount; ++p) {
    const auto& a = cur.peg(p);
    const auto& b = goal.peg(p);
    if (!a.empty() && a.front() == n && !b.empty() && b.front() == n) {
      cur.peg(p).erase(cur.peg(p).begin());
      goal.peg(p).erase(goal.peg(p).begin());
      return true;
    }
  }
  return false;
}

StripResult strip_in_place(Configuration cur, Configuration goal) {
  while (strip_largest_in_place(cur, goal)) {
  }
  return {std::move(cur), std::move(goal)};
}

Configuration restrict_small(const Configuration& c, int mid) {
  Configuration out;
  for (PegId p = 1; p <= kPegCount; ++p) {
    for (Disk d : c.peg(p))
      if (d <= mid) out.peg(p).push_back(d);
  }
  return out;
}

Configuration restrict_large(const Configuration& c, int mid) {
  Configuration out;
  for (PegId p = 1; p <= kPegCount; ++p) {
    for (Disk d : c.peg(p))
      if (d > mid) out.peg(p).push_back(d - mid);
  }
  return out;
}

PegId bottom_peg(const Configuration& c, Disk d) {
  for (PegId p = 1; p <= kPegCount; ++p) {
    const auto& st = c.peg(p);
    if (std::find(st.begin(), st.end(), d) == st.end()) continue;
    if (st.front() != d)
      throw std::logic_error("bottom_peg: disk is not at the bottom of its peg");
    return p;
  }
  throw std::logic_error("bottom_peg: disk not present");
}

std::string to_text(const Configuration& c) {
  std::ostringstream os;
  for (PegId p = 1; p <= kPegCount; ++p) {
    os << "peg" << p << ":";
    for (Disk d : c.peg(p)) os << ' ' << d;
    os << '\n';
  }
  return os.str();
}

}  // namespace hanoi
