#pragma once

#include <utility>
#include <vector>

namespace rollout {

/// Closed-form performance curves. The Consec* tags bound the first
/// iteration of Consecutive-Rollout, the Exh* tags the first iteration of
/// Exhaustive-Rollout; GreedyMean is the constant 1/3 expected greedy gap.
enum class TheoremTag {
  ConsecSS,   // (3 + 13n) / (60n), upper bound on the subset sum gap, n >= 3
  ConsecKP,   // (59n - 26) / (288n), lower bound on the knapsack gain, n >= 3
  ExhSSSum,   // finite-sum upper bound on the subset sum gap, n >= 2
  ExhSSLog,   // looser logarithmic form of ExhSSSum, n >= 2
  ExhKPFull,  // harmonic-sum lower bound on the knapsack gain, n >= 1
  ExhKPNoT,   // ExhKPFull without the nested positive sum, n >= 1
  GreedyMean, // expected Blind-Greedy gap, 1/3 for every n >= 1
};

/// A bound evaluated over a range of item counts.
struct BoundCurve {
  TheoremTag tag;
  std::vector<std::pair<int, double>> points;
};

/// CDF of the Blind-Greedy gap given total overflow: 2g - g^2 on [0,1].
/// Throws std::domain_error outside the unit interval.
double greedy_gap_cdf(double g);

/// Expected-gap upper bound for one Consecutive-Rollout iteration on the
/// subset sum problem, (3 + 13n) / (60n). Requires n >= 3.
double consec_ss_bound(int n);

/// Expected-gain lower bound for one Consecutive-Rollout iteration on the
/// knapsack problem, (-26 + 59n) / (288n). Requires n >= 3.
double consec_kp_bound(int n);

/// Expected-gap upper bound for one Exhaustive-Rollout iteration on the
/// subset sum problem:
///   1/(n(n+2)) + (1/n) * sum_{m=0}^{n-2} (9+2m) / (3(3+m)(4+m)).
/// Requires n >= 2.
double exh_ss_bound(int n);

/// Logarithmic upper bound on exh_ss_bound (midpoint-rule relaxation):
///   1/(n(n+2)) + (1/n) * log[((3+2n)/5) * (7/(5+2n))^{1/3}].
/// Requires n >= 2.
double exh_ss_log_bound(int n);

/// nth harmonic number, H(0) = 0. Requires n >= 0.
double harmonic(int n);

/// Summand of the nested positive series in the exhaustive knapsack bound:
///   T(j,m) = 2(-4 + j - 4m + jm - m^2 - (j+(2+m)^2) H(j)) / D
///          + 2(j + (2+m)^2) H(3+m) / D,
/// with D = j (j-3-m)(j-2-m)(1+m)(2+m). Requires m >= 0 and 1 <= j <= m+1,
/// which keeps D nonzero.
double exh_kp_T(int j, int m);

/// Expected-gain lower bound for one Exhaustive-Rollout iteration on the
/// knapsack problem. With include_T false the nested sum of T(j,m) terms is
/// omitted, giving a looser but still valid bound. Requires n >= 1.
double exh_kp_bound(int n, bool include_T);

/// Smallest n for which a tag's formula is defined.
int bound_min_n(TheoremTag tag);

/// Evaluates one tag at one n, with the same validity checks as the
/// individual evaluators.
double bound_value(TheoremTag tag, int n);

/// Evaluates a tag over n_min..n_max inclusive.
BoundCurve bound_curve(TheoremTag tag, int n_min, int n_max);

}  // namespace rollout
