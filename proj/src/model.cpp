#include "rollout/model.hpp"

#include <utility>
#include <vector>

#include "rollout/rng.hpp"

namespace rollout {

namespace {

void check_config(const ModelConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("ModelConfig: n must be >= 1");
}

// Draws weights and capacity into the buffers; returns the total weight.
double draw_weights(Rng& rng, int n, std::vector<double>& w, double& b) {
  w.resize(static_cast<std::size_t>(n));
  double total = 0.0;
  for (double& wi : w) {
    wi = rng.uniform01();
    total += wi;
  }
  b = rng.uniform(static_cast<double>(n));
  return total;
}

Instance finish_instance(const ModelConfig& cfg, Rng& rng,
                         std::vector<double> w, double b) {
  if (cfg.problem == ProblemKind::SubsetSum) {
    return Instance::subset_sum(std::move(w), b);
  }
  std::vector<double> p(w.size());
  for (double& pi : p) pi = rng.uniform01();
  return Instance(std::move(w), std::move(p), b);
}

// 1-based critical index of a Blind-Greedy pass, 0 if everything fits.
int critical_of(const std::vector<double>& w, double b) {
  double cap = b;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > cap) return static_cast<int>(i) + 1;
    cap -= w[i];
  }
  return 0;
}

}  // namespace

Instance sample_instance(const ModelConfig& cfg, TrialSeed seed) {
  check_config(cfg);
  Rng rng(seed.master_seed, seed.trial_index);
  std::vector<double> w;
  double b = 0.0;
  for (;;) {
    const double total = draw_weights(rng, cfg.n, w, b);
    if (!cfg.condition_on_overflow || total > b) break;
  }
  return finish_instance(cfg, rng, std::move(w), b);
}

Instance sample_conditioned_on_critical(const ModelConfig& cfg, int k,
                                        TrialSeed seed,
                                        std::uint64_t max_attempts) {
  check_config(cfg);
  if (k < 1 || k > cfg.n) {
    throw std::invalid_argument(
        "sample_conditioned_on_critical: k must be in 1..n");
  }
  Rng rng(seed.master_seed, seed.trial_index);
  std::vector<double> w;
  double b = 0.0;
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    draw_weights(rng, cfg.n, w, b);
    if (critical_of(w, b) == k) {
      return finish_instance(cfg, rng, std::move(w), b);
    }
  }
  throw SamplingBudgetExceeded(
      "sample_conditioned_on_critical: rejection budget exceeded");
}

}  // namespace rollout
