#include "hanoi/memo.hpp"

namespace hanoi {
namespace {

// Node payload plus the typical libstdc++ per-node overhead (next pointer and
// cached hash).  An estimate, not an audit.
constexpr std::size_t kNodeOverhead = 2 * sizeof(void*);

template <class Map>
std::size_t map_bytes(const Map& m) {
  return m.size() * (sizeof(typename Map::value_type) + kNodeOverhead) +
         m.bucket_count() * sizeof(void*);
}

}  // namespace

std::size_t MemoTable::approx_bytes() const {
  return map_bytes(plan4) + map_bytes(plan3);
}

void MemoTable::clear() {
  plan4.clear();
  plan3.clear();
  hits = 0;
  misses = 0;
}

std::string to_string(LimitKind k) {
  switch (k) {
    case LimitKind::kNone: return "none";
    case LimitKind::kMemoEntries: return "memo entry cap";
    case LimitKind::kDeadline: return "deadline";
  }
  return "unknown limit";
}

SolverLimitError::SolverLimitError(LimitKind kind)
    : std::runtime_error("solver limit reached: " + to_string(kind)), kind_(kind) {}

}  // namespace hanoi
