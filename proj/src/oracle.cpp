#include "rollout/oracle.hpp"

#include <cstdint>
#include <stdexcept>

namespace rollout {

namespace {

struct Search {
  const std::vector<double>& w;
  const std::vector<double>& p;
  std::vector<double> suffix_profit;  // suffix_profit[i] = sum of p[i..n-1]
  double best_value = 0.0;
  std::uint32_t best_mask = 0;

  void dfs(int i, double cap, double value, std::uint32_t mask) {
    if (value > best_value) {
      best_value = value;
      best_mask = mask;
    }
    if (i >= static_cast<int>(w.size())) return;
    if (value + suffix_profit[i] <= best_value) return;
    if (w[i] <= cap) {
      dfs(i + 1, cap - w[i], value + p[i], mask | (1u << i));
    }
    dfs(i + 1, cap, value, mask);
  }
};

}  // namespace

ExactSolution solve_exact(const Instance& inst) {
  const int n = inst.size();
  if (n > kMaxExactItems) {
    throw std::invalid_argument("solve_exact: instance too large");
  }
  Search search{inst.weights(), inst.profits(), {}, 0.0, 0};
  search.suffix_profit.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    search.suffix_profit[i] = search.suffix_profit[i + 1] + inst.profits()[i];
  }
  search.dfs(0, inst.capacity(), 0.0, 0);

  ExactSolution out;
  out.value = search.best_value;
  for (int i = 0; i < n; ++i) {
    if (search.best_mask & (1u << i)) out.chosen.push_back(i + 1);
  }
  return out;
}

double optimality_gap(const Instance& inst, double algo_value) {
  return solve_exact(inst).value - algo_value;
}

}  // namespace rollout
