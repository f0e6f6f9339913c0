#include "rollout/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rollout {

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double d = other.mean_ - mean_;
  const std::uint64_t total = n_ + other.n_;
  m2_ += other.m2_ + d * d * (static_cast<double>(n_) *
                              static_cast<double>(other.n_) /
                              static_cast<double>(total));
  mean_ += d * static_cast<double>(other.n_) / static_cast<double>(total);
  n_ = total;
}

double RunningStats::variance() const {
  if (n_ < 2) return 0.0;
  return m2_ / static_cast<double>(n_ - 1);
}

double RunningStats::std_error() const {
  if (n_ == 0) return 0.0;
  return std::sqrt(variance() / static_cast<double>(n_));
}

Estimate RunningStats::estimate() const {
  Estimate e;
  e.mean = mean_;
  e.std_error = std_error();
  e.trials = n_;
  e.ci95 = {mean_ - 1.96 * e.std_error, mean_ + 1.96 * e.std_error};
  return e;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) {
    throw std::invalid_argument("ks_statistic: empty sample");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0) throw std::invalid_argument("ks_critical_value: n must be > 0");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("ks_critical_value: alpha must be in (0,1)");
  }
  return std::sqrt(std::log(2.0 / alpha) / 2.0) /
         std::sqrt(static_cast<double>(n));
}

KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf) {
  const std::size_t n = samples.size();
  KsResult r;
  r.statistic = ks_statistic(std::move(samples), cdf);
  r.critical = 1.63 / std::sqrt(static_cast<double>(n));
  r.pass = r.statistic < r.critical;
  return r;
}

KsResult ks_test_alpha(std::vector<double> samples,
                       const std::function<double(double)>& cdf,
                       double alpha) {
  const std::size_t n = samples.size();
  KsResult r;
  r.statistic = ks_statistic(std::move(samples), cdf);
  r.critical = ks_critical_value(n, alpha);
  r.pass = r.statistic < r.critical;
  return r;
}

ChiSquareResult chi_square_test(std::span<const std::uint64_t> counts,
                                std::span<const double> probs, double alpha) {
  if (counts.size() != probs.size() || counts.size() < 2) {
    throw std::invalid_argument(
        "chi_square_test: need matching counts/probs with >= 2 cells");
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  if (total == 0) throw std::invalid_argument("chi_square_test: no counts");

  ChiSquareResult r;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = probs[i] * static_cast<double>(total);
    if (expected <= 0.0) {
      throw std::invalid_argument("chi_square_test: zero expected count");
    }
    const double diff = static_cast<double>(counts[i]) - expected;
    r.statistic += diff * diff / expected;
  }
  r.dof = counts.size() - 1;
  r.critical = chi_square_quantile(1.0 - alpha, static_cast<double>(r.dof));
  r.pass = r.statistic < r.critical;
  return r;
}

double regularized_gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0) {
    throw std::domain_error("regularized_gamma_p: requires a > 0, x >= 0");
  }
  if (x == 0.0) return 0.0;

  const double log_prefactor = -x + a * std::log(x) - std::lgamma(a);
  if (x < a + 1.0) {
    // Series: P(a,x) = e^{-x} x^a / Gamma(a) * sum x^k / (a (a+1) ... (a+k))
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 1000; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(log_prefactor);
  }
  // Continued fraction (modified Lentz) for Q(a,x).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(log_prefactor) * h;
}

double chi_square_cdf(double x, double dof) {
  if (dof <= 0.0) throw std::domain_error("chi_square_cdf: dof must be > 0");
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(dof / 2.0, x / 2.0);
}

double chi_square_quantile(double p, double dof) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("chi_square_quantile: p must be in (0,1)");
  }
  double lo = 0.0;
  double hi = dof + 10.0;
  while (chi_square_cdf(hi, dof) < p) {
    hi *= 2.0;
    if (hi > 1e9) break;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (chi_square_cdf(mid, dof) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace rollout
