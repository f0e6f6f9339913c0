#pragma once

#include <span>
#include <vector>

#include "rollout/instance.hpp"

namespace rollout {

/// Result of one Blind-Greedy pass over an instance.
///
/// The algorithm packs items in the given order and stops at the first item
/// that does not fit (the critical item). `packed` holds 1-based indices of
/// the packed prefix, `gap` is the capacity left when the pass stops, and
/// `critical_index` is the 1-based index of the first infeasible item, or 0
/// when every item fit.
struct GreedyOutcome {
  std::vector<int> packed;
  double value = 0.0;
  double gap = 0.0;
  int critical_index = 0;
};

GreedyOutcome blind_greedy(const Instance& inst);

namespace detail {

/// Value and leftover capacity of a greedy pass, without the packed list.
struct GreedyEval {
  double value = 0.0;
  double gap = 0.0;
};

/// Blind-Greedy over items `from..n-1` of `inst` with the given capacity.
inline GreedyEval greedy_suffix(const Instance& inst, int from,
                                double capacity) {
  const auto& w = inst.weights();
  const auto& p = inst.profits();
  GreedyEval out;
  out.gap = capacity;
  const int n = inst.size();
  for (int i = from; i < n; ++i) {
    if (w[i] > out.gap) break;
    out.gap -= w[i];
    out.value += p[i];
  }
  return out;
}

/// Blind-Greedy with item `front` forced to the head of the sequence; the
/// remaining `items` are scanned in order, skipping `front` where it occurs.
/// If `front` itself does not fit the pass packs nothing.
inline GreedyEval greedy_with_front(std::span<const double> w,
                                    std::span<const double> p, double capacity,
                                    std::span<const int> items, int front) {
  GreedyEval out;
  out.gap = capacity;
  if (w[front] > out.gap) return out;
  out.gap -= w[front];
  out.value += p[front];
  for (int id : items) {
    if (id == front) continue;
    if (w[id] > out.gap) break;
    out.gap -= w[id];
    out.value += p[id];
  }
  return out;
}

}  // namespace detail
}  // namespace rollout
