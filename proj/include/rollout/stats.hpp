#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace rollout {

/// Monte Carlo summary of one estimator.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(trials)
  std::uint64_t trials = 0;
  std::pair<double, double> ci95{0.0, 0.0};  // mean +- 1.96 * std_error
};

/// Welford one-pass mean/variance accumulator with an associative merge, so
/// per-chunk results can be combined in a fixed order independent of which
/// worker produced them.
class RunningStats {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }

  void merge(const RunningStats& other);

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  /// Sample variance (n-1 denominator); 0 for fewer than two samples.
  double variance() const;
  double std_error() const;
  Estimate estimate() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct KsResult {
  double statistic = 0.0;
  double critical = 0.0;
  bool pass = false;
};

/// One-sample Kolmogorov-Smirnov statistic against `cdf`.
/// Throws std::invalid_argument on an empty sample.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

/// Asymptotic critical value sqrt(ln(2/alpha)/2) / sqrt(n).
double ks_critical_value(std::size_t n, double alpha);

/// KS test at the fixed alpha ~ 0.01 threshold 1.63 / sqrt(N).
KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf);

/// KS test at an arbitrary asymptotic significance level.
KsResult ks_test_alpha(std::vector<double> samples,
                       const std::function<double(double)>& cdf, double alpha);

struct ChiSquareResult {
  double statistic = 0.0;
  double critical = 0.0;
  std::size_t dof = 0;
  bool pass = false;
};

/// Pearson chi-square goodness-of-fit of observed counts against cell
/// probabilities (must sum to 1); dof = cells - 1.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> counts,
                                std::span<const double> probs, double alpha);

/// Regularized lower incomplete gamma P(a, x), via the series expansion for
/// x < a+1 and a continued fraction otherwise.
double regularized_gamma_p(double a, double x);

double chi_square_cdf(double x, double dof);

/// Inverse chi-square CDF by bisection.
double chi_square_quantile(double p, double dof);

}  // namespace rollout
