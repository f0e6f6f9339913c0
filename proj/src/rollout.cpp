#include "rollout/rollout.hpp"

#include <algorithm>
#include <numeric>

namespace rollout {

using detail::greedy_suffix;
using detail::greedy_with_front;

RolloutResult consecutive_rollout(const Instance& inst) {
  const auto& w = inst.weights();
  const auto& p = inst.profits();
  const int n = inst.size();

  RolloutResult out;
  out.trace.reserve(static_cast<std::size_t>(n));
  double cap = inst.capacity();
  for (int i = 0; i < n; ++i) {
    // Remaining items form the suffix i..n-1, with item i first in order.
    const auto take = greedy_suffix(inst, i, cap);
    const auto skip = greedy_suffix(inst, i + 1, cap);
    const bool add = take.value > skip.value;
    if (add) {
      cap -= w[i];
      out.value += p[i];
      out.solution.push_back(i + 1);
    }
    out.trace.push_back({i + 1, take.value, skip.value, add, out.value});
  }
  return out;
}

RolloutResult exhaustive_rollout(const Instance& inst) {
  const auto& w = inst.weights();
  const auto& p = inst.profits();
  const int n = inst.size();

  RolloutResult out;
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 0);

  double cap = inst.capacity();
  for (int t = 0; t < n && !remaining.empty(); ++t) {
    int best = -1;
    double best_value = 0.0;
    // Strict > keeps the lowest-index item on ties (remaining is ascending).
    for (int id : remaining) {
      const auto eval = greedy_with_front(w, p, cap, remaining, id);
      if (eval.value > best_value) {
        best_value = eval.value;
        best = id;
      }
    }
    if (best < 0) {
      // No candidate has positive value; later iterations would repeat this
      // state, so stop here.
      out.trace.push_back({0, best_value, 0.0, false, out.value});
      break;
    }
    cap -= w[best];
    out.value += p[best];
    out.solution.push_back(best + 1);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    out.trace.push_back({best + 1, best_value, 0.0, true, out.value});
  }
  return out;
}

FirstIterStats first_iteration_consecutive(const Instance& inst) {
  const GreedyOutcome base = blind_greedy(inst);
  const auto drop = greedy_suffix(inst, 1, inst.capacity());

  FirstIterStats out;
  out.greedy_gap = base.gap;
  out.min_gap = std::min(base.gap, drop.gap);
  out.gain = std::max(0.0, drop.value - base.value);
  return out;
}

FirstIterStats first_iteration_exhaustive(const Instance& inst) {
  const auto& w = inst.weights();
  const auto& p = inst.profits();
  const int n = inst.size();

  const GreedyOutcome base = blind_greedy(inst);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  FirstIterStats out;
  out.greedy_gap = base.gap;
  // Moving any already-packed item to the front reproduces the greedy gap,
  // so the base gap participates in the minimum; seeding with it avoids
  // re-summation noise on those candidates.
  out.min_gap = base.gap;
  out.gain = 0.0;
  for (int j = 0; j < n; ++j) {
    const auto eval = greedy_with_front(w, p, inst.capacity(), order, j);
    out.min_gap = std::min(out.min_gap, eval.gap);
    out.gain = std::max(out.gain, eval.value - base.value);
  }
  out.gain = std::max(0.0, out.gain);
  return out;
}

}  // namespace rollout
