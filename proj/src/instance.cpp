#include "rollout/instance.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rollout {

Instance::Instance(std::vector<double> weights, std::vector<double> profits,
                   double capacity)
    : weights_(std::move(weights)),
      profits_(std::move(profits)),
      capacity_(capacity) {
  if (weights_.empty()) {
    throw std::invalid_argument("Instance: need at least one item");
  }
  if (weights_.size() != profits_.size()) {
    throw std::invalid_argument(
        "Instance: weights and profits must have equal length");
  }
  if (!std::isfinite(capacity_) || capacity_ < 0.0) {
    throw std::invalid_argument("Instance: capacity must be finite and >= 0");
  }
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("Instance: weights must be finite and >= 0");
    }
  }
  for (double p : profits_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("Instance: profits must be finite and >= 0");
    }
  }
}

Instance Instance::subset_sum(std::vector<double> weights, double capacity) {
  std::vector<double> profits = weights;
  return Instance(std::move(weights), std::move(profits), capacity);
}

double Instance::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

}  // namespace rollout
