#pragma once

#include <vector>

namespace rollout {

enum class ProblemKind { SubsetSum, Knapsack };

/// One 0-1 knapsack instance: item weights, item profits, capacity.
///
/// Subset sum instances carry profits identical to their weights; build them
/// through subset_sum() so the identity holds bit-for-bit. Instances are
/// immutable after construction and safe to share across threads.
class Instance {
 public:
  /// Throws std::invalid_argument unless weights and profits have equal
  /// length n >= 1 and all entries (and the capacity) are finite and >= 0.
  Instance(std::vector<double> weights, std::vector<double> profits,
           double capacity);

  /// Subset sum constructor: profits are a copy of the weights.
  static Instance subset_sum(std::vector<double> weights, double capacity);

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& profits() const { return profits_; }
  double capacity() const { return capacity_; }
  int size() const { return static_cast<int>(weights_.size()); }

  double total_weight() const;

 private:
  std::vector<double> weights_;
  std::vector<double> profits_;
  double capacity_;
};

}  // namespace rollout
