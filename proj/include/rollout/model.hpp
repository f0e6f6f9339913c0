#pragma once

#include <cstdint>
#include <stdexcept>

#include "rollout/instance.hpp"

namespace rollout {

/// Stochastic instance model: n item weights ~ U[0,1] i.i.d., capacity
/// ~ U[0,n], and for the knapsack problem profits ~ U[0,1] i.i.d. With
/// `condition_on_overflow` set, instances are rejection-sampled until the
/// total weight exceeds the capacity (accepted with probability 1/2).
struct ModelConfig {
  int n = 1;
  ProblemKind problem = ProblemKind::SubsetSum;
  bool condition_on_overflow = false;
};

/// Names one trial's random stream. Distinct (master_seed, trial_index)
/// pairs yield independent streams, which makes every experiment a pure
/// function of its master seed regardless of worker scheduling.
struct TrialSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
};

/// Thrown when conditional rejection sampling exhausts its attempt budget.
class SamplingBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Draws one instance from the model. Deterministic in (cfg, seed).
Instance sample_instance(const ModelConfig& cfg, TrialSeed seed);

/// Rejection-samples instances until the Blind-Greedy critical index equals
/// k (1 <= k <= n). Throws SamplingBudgetExceeded after `max_attempts` draws.
Instance sample_conditioned_on_critical(const ModelConfig& cfg, int k,
                                        TrialSeed seed,
                                        std::uint64_t max_attempts = 1000000);

}  // namespace rollout
