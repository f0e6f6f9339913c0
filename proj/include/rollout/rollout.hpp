#pragma once

#include <vector>

#include "rollout/greedy.hpp"
#include "rollout/instance.hpp"

namespace rollout {

/// One rollout iteration. For Consecutive-Rollout, `take_estimate` and
/// `skip_estimate` are the two Blind-Greedy completion values (committed
/// profit excluded) and `item` is the item decided on. For Exhaustive-Rollout,
/// `take_estimate` is the best completion value over the remaining items,
/// `item` is the committed item (0 on the terminating iteration), and
/// `skip_estimate` stays 0. `value_after` is the committed solution value
/// once the iteration is done.
struct RolloutStep {
  int item = 0;
  double take_estimate = 0.0;
  double skip_estimate = 0.0;
  bool added = false;
  double value_after = 0.0;
};

/// Feasible solution produced by a rollout run. `solution` lists 1-based item
/// indices in order of commitment; `value` is the total profit.
struct RolloutResult {
  std::vector<int> solution;
  double value = 0.0;
  std::vector<RolloutStep> trace;
};

/// Scans items in order; at each step compares the Blind-Greedy completion
/// with the item kept first against the completion without it, and keeps the
/// item only on a strict improvement.
RolloutResult consecutive_rollout(const Instance& inst);

/// Each round evaluates every remaining item moved to the front of the
/// sequence under Blind-Greedy and commits the best one. Ties go to the
/// lowest index; the run stops as soon as no candidate has positive value.
RolloutResult exhaustive_rollout(const Instance& inst);

/// First-iteration quantities of a rollout run: the plain greedy gap, the
/// smallest gap over the completions tried, and the best profit gain over
/// the greedy solution (floored at zero).
struct FirstIterStats {
  double greedy_gap = 0.0;
  double min_gap = 0.0;
  double gain = 0.0;
};

/// Best of two completions: Blind-Greedy as-is, and Blind-Greedy with the
/// first item dropped.
FirstIterStats first_iteration_consecutive(const Instance& inst);

/// Best over n completions, one per item moved to the front.
FirstIterStats first_iteration_exhaustive(const Instance& inst);

}  // namespace rollout
