#pragma once

#include <vector>

#include "rollout/instance.hpp"

namespace rollout {

/// Ground-truth optimum for a small instance.
struct ExactSolution {
  std::vector<int> chosen;  // 1-based, ascending
  double value = 0.0;
  bool is_optimal = true;
};

/// Items beyond this count are rejected; continuous weights rule out the
/// classic DP table, so the solver enumerates with pruning.
inline constexpr int kMaxExactItems = 25;

/// Maximum-profit feasible subset by depth-first enumeration with a
/// remaining-profit bound. Throws std::invalid_argument when the instance
/// has more than kMaxExactItems items.
ExactSolution solve_exact(const Instance& inst);

/// solve_exact(inst).value - algo_value; nonnegative for any feasible
/// algorithm output. Propagates the solver's size cap.
double optimality_gap(const Instance& inst, double algo_value);

}  // namespace rollout
