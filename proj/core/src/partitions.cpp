#include "hanoi/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace hanoi {
namespace {

struct NameEntry {
  PartitionHeuristic h;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {PartitionHeuristic::kRand, "rand"},
    {PartitionHeuristic::kLiefvoort, "liefvoort"},
    {PartitionHeuristic::kRohlGedeon, "rohl-gedeon"},
    {PartitionHeuristic::kTriSmallestGeq, "tri-smallest-geq"},
    {PartitionHeuristic::kTriLargestLeq, "tri-largest-leq"},
    {PartitionHeuristic::kStockmeyer, "stockmeyer"},
    {PartitionHeuristic::kExhaustive, "exhaustive"},
};

// Append-only table of triangular numbers; grows on demand.
class TriangularTable {
 public:
  std::uint64_t value(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    grow_to(k);
    return t_[static_cast<std::size_t>(k)];
  }

  // Smallest k with T_k >= n (n >= 1).
  int smallest_geq(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    int k = 1;
    grow_to(k);
    while (t_[static_cast<std::size_t>(k)] < n) grow_to(++k);
    return k;
  }

 private:
  void grow_to(int k) {
    while (static_cast<int>(t_.size()) <= k)
      t_.push_back(t_.back() + t_.size());  // T_k = T_{k-1} + k
  }

  std::mutex mu_;
  std::vector<std::uint64_t> t_{0};
};

TriangularTable& tri_table() {
  static TriangularTable table;
  return table;
}

}  // namespace

std::string_view heuristic_name(PartitionHeuristic h) {
  for (const auto& e : kNames)
    if (e.h == h) return e.name;
  throw std::logic_error("heuristic_name: unknown heuristic");
}

std::optional<PartitionHeuristic> heuristic_from_name(std::string_view name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.h;
  return std::nullopt;
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  // The float seed can be off by one in either direction; fix it exactly.
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

std::uint64_t triangular(int k) {
  if (k < 0) throw std::invalid_argument("triangular: negative index");
  return tri_table().value(k);
}

std::vector<int> estimate_mid(PartitionHeuristic h, int n) {
  if (n < 0) throw std::invalid_argument("estimate_mid: negative disk count");
  const auto un = static_cast<std::uint64_t>(n);
  switch (h) {
    case PartitionHeuristic::kRand: {
      // k = round(sqrt(2n)) computed as floor((sqrt(8n) + 1) / 2).
      const int k = static_cast<int>((isqrt(8 * un) + 1) / 2);
      return {n - k};
    }
    case PartitionHeuristic::kLiefvoort: {
      // k = ceil((sqrt(8n + 1) - 1) / 2), exact when 8n + 1 is square.
      const std::uint64_t s = isqrt(8 * un + 1);
      int k;
      if (s * s == 8 * un + 1)
        k = static_cast<int>((s - 1) / 2);
      else
        k = static_cast<int>(s % 2 == 1 ? (s + 1) / 2 : s / 2);
      return {n - k};
    }
    case PartitionHeuristic::kRohlGedeon: {
      // k = floor((sqrt(8n + 1) - 1) / 2).
      const int k = static_cast<int>((isqrt(8 * un + 1) - 1) / 2);
      return {n - k};
    }
    case PartitionHeuristic::kTriSmallestGeq: {
      if (n == 0) return {0};
      const int k = tri_table().smallest_geq(un);
      return {n - k};
    }
    case PartitionHeuristic::kTriLargestLeq: {
      if (n == 0) return {0};
      // Largest k with T_k <= n.
      const int k = tri_table().smallest_geq(un);
      return {triangular(k) == un ? n - k : n - (k - 1)};
    }
    case PartitionHeuristic::kStockmeyer: {
      if (n == 0) return {0};
      // T_{k-1} < n <= T_k.  On a triangular boundary the split is unique;
      // strictly between, both neighbours are worth trying.
      const int k = tri_table().smallest_geq(un);
      if (triangular(k) == un) return {n - k};
      return {n - (k - 1), n - k};
    }
    case PartitionHeuristic::kExhaustive:
      return {};
  }
  throw std::logic_error("estimate_mid: unknown heuristic");
}

std::vector<int> candidate_mids(PartitionHeuristic h, int n, int error_bound) {
  if (error_bound < 0)
    throw std::invalid_argument("candidate_mids: negative error bound");
  std::vector<int> out;
  if (n < 2) return out;
  if (h == PartitionHeuristic::kExhaustive) {
    out.reserve(static_cast<std::size_t>(n) - 1);
    for (int m = 1; m <= n - 1; ++m) out.push_back(m);
    return out;
  }
  for (int base : estimate_mid(h, n)) {
    const int pivot = std::clamp(base, 1, n - 1);
    const int lo = std::max(pivot - error_bound, 1);
    const int hi = std::min(pivot + error_bound, n - 1);
    for (int m = lo; m <= hi; ++m) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hanoi
