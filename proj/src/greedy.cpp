#include "rollout/greedy.hpp"

namespace rollout {

GreedyOutcome blind_greedy(const Instance& inst) {
  const auto& w = inst.weights();
  const auto& p = inst.profits();
  const int n = inst.size();

  GreedyOutcome out;
  out.gap = inst.capacity();
  out.packed.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (w[i] > out.gap) {
      out.critical_index = i + 1;
      return out;
    }
    out.gap -= w[i];
    out.value += p[i];
    out.packed.push_back(i + 1);
  }
  return out;
}

}  // namespace rollout
