#include "rollout/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rollout {

namespace {

void require_n(int n, int min_n, const char* what) {
  if (n < min_n) {
    throw std::domain_error(std::string(what) + ": requires n >= " +
                            std::to_string(min_n));
  }
}

}  // namespace

double greedy_gap_cdf(double g) {
  if (!(g >= 0.0 && g <= 1.0)) {
    throw std::domain_error("greedy_gap_cdf: g must lie in [0,1]");
  }
  return 2.0 * g - g * g;
}

double consec_ss_bound(int n) {
  require_n(n, 3, "consec_ss_bound");
  const double nn = static_cast<double>(n);
  return (3.0 + 13.0 * nn) / (60.0 * nn);
}

double consec_kp_bound(int n) {
  require_n(n, 3, "consec_kp_bound");
  const double nn = static_cast<double>(n);
  return (-26.0 + 59.0 * nn) / (288.0 * nn);
}

double exh_ss_bound(int n) {
  require_n(n, 2, "exh_ss_bound");
  const double nn = static_cast<double>(n);
  double sum = 0.0;
  for (int m = 0; m <= n - 2; ++m) {
    const double mm = static_cast<double>(m);
    sum += (9.0 + 2.0 * mm) / (3.0 * (3.0 + mm) * (4.0 + mm));
  }
  return 1.0 / (nn * (nn + 2.0)) + sum / nn;
}

double exh_ss_log_bound(int n) {
  require_n(n, 2, "exh_ss_log_bound");
  const double nn = static_cast<double>(n);
  const double arg = ((3.0 + 2.0 * nn) / 5.0) *
                     std::cbrt(7.0 / (5.0 + 2.0 * nn));
  return 1.0 / (nn * (nn + 2.0)) + std::log(arg) / nn;
}

double harmonic(int n) {
  if (n < 0) throw std::domain_error("harmonic: requires n >= 0");
  double h = 0.0;
  for (int l = 1; l <= n; ++l) h += 1.0 / static_cast<double>(l);
  return h;
}

double exh_kp_T(int j, int m) {
  if (m < 0 || j < 1 || j > m + 1) {
    throw std::domain_error("exh_kp_T: requires m >= 0 and 1 <= j <= m+1");
  }
  const double jj = static_cast<double>(j);
  const double mm = static_cast<double>(m);
  const double denom = jj * (jj - 3.0 - mm) * (jj - 2.0 - mm) * (1.0 + mm) *
                       (2.0 + mm);
  const double coef = jj + (2.0 + mm) * (2.0 + mm);
  const double num1 =
      2.0 * (-4.0 + jj - 4.0 * mm + jj * mm - mm * mm - coef * harmonic(j));
  const double num2 = 2.0 * coef * harmonic(3 + m);
  return num1 / denom + num2 / denom;
}

double exh_kp_bound(int n, bool include_T) {
  require_n(n, 1, "exh_kp_bound");
  const double nn = static_cast<double>(n);
  double value = 1.0 + 2.0 / (nn * (nn + 1.0)) - 2.0 * harmonic(n) / (nn * nn);
  double sum = 0.0;
  for (int m = 0; m <= n - 2; ++m) {
    const double mm = static_cast<double>(m);
    const double h1 = harmonic(m + 1);
    const double p1 = 186.0 + 472.0 * mm + 448.0 * mm * mm +
                      203.0 * mm * mm * mm + 45.0 * mm * mm * mm * mm +
                      4.0 * mm * mm * mm * mm * mm;
    const double p2 = 244.0 + 454.0 * mm + 334.0 * mm * mm +
                      124.0 * mm * mm * mm + 24.0 * mm * mm * mm * mm +
                      2.0 * mm * mm * mm * mm * mm;
    const double p3 = 48.0 + 88.0 * mm + 60.0 * mm * mm +
                      18.0 * mm * mm * mm + 2.0 * mm * mm * mm * mm;
    const double denom = (mm + 1.0) * (mm + 2.0) * (mm + 2.0) * (mm + 2.0) *
                         (mm + 3.0) * (mm + 3.0);
    double term = (p1 - p2 * h1 - p3 * h1 * h1) / denom;
    if (include_T) {
      for (int j = 1; j <= m + 1; ++j) term += exh_kp_T(j, m);
    }
    sum += term;
  }
  return value + sum / nn;
}

int bound_min_n(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::ConsecSS:
    case TheoremTag::ConsecKP:
      return 3;
    case TheoremTag::ExhSSSum:
    case TheoremTag::ExhSSLog:
      return 2;
    case TheoremTag::ExhKPFull:
    case TheoremTag::ExhKPNoT:
    case TheoremTag::GreedyMean:
      return 1;
  }
  throw std::logic_error("bound_min_n: unknown tag");
}

double bound_value(TheoremTag tag, int n) {
  switch (tag) {
    case TheoremTag::ConsecSS:
      return consec_ss_bound(n);
    case TheoremTag::ConsecKP:
      return consec_kp_bound(n);
    case TheoremTag::ExhSSSum:
      return exh_ss_bound(n);
    case TheoremTag::ExhSSLog:
      return exh_ss_log_bound(n);
    case TheoremTag::ExhKPFull:
      return exh_kp_bound(n, true);
    case TheoremTag::ExhKPNoT:
      return exh_kp_bound(n, false);
    case TheoremTag::GreedyMean:
      require_n(n, 1, "GreedyMean");
      return 1.0 / 3.0;
  }
  throw std::logic_error("bound_value: unknown tag");
}

BoundCurve bound_curve(TheoremTag tag, int n_min, int n_max) {
  if (n_min > n_max) {
    throw std::domain_error("bound_curve: n_min must be <= n_max");
  }
  BoundCurve curve{tag, {}};
  curve.points.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    curve.points.emplace_back(n, bound_value(tag, n));
  }
  return curve;
}

}  // namespace rollout
