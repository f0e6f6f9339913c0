#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rollout/bounds.hpp"
#include "rollout/instance.hpp"
#include "rollout/model.hpp"
#include "rollout/stats.hpp"

namespace rollout {

/// Per-trial performance metrics, all conditioned on total weight exceeding
/// the capacity. The first five are the first-iteration quantities that the
/// closed-form curves bound; the *Full variants run the complete rollout.
enum class Metric {
  GreedyGap,
  ConsecSSGap,
  ConsecKPGain,
  ExhSSGap,
  ExhKPGain,
  ConsecSSGapFull,
  ConsecKPGainFull,
  ExhSSGapFull,
  ExhKPGainFull,
};

const char* metric_name(Metric metric);
ProblemKind metric_problem(Metric metric);

/// Common Monte Carlo knobs. workers == 0 selects the hardware concurrency;
/// results do not depend on the worker count.
struct RunOptions {
  std::uint64_t trials = 100000;
  std::uint64_t master_seed = 0;
  int workers = 0;
};

/// Samples conditioned instances, evaluates one metric per trial, and
/// aggregates with chunked Welford accumulators merged pairwise in a fixed
/// order. Deterministic in (metric, n, trials, master_seed).
Estimate run_metric(Metric metric, int n, const RunOptions& opt);

enum class FigureKind { Consec, Exh };

/// One simulated point paired with its closed-form bound.
struct FigureRow {
  FigureKind figure;
  Metric metric;
  int n = 0;
  Estimate simulated;
  double bound = 0.0;
};

/// Simulation-vs-bound data: Consec covers n = 3..20, Exh covers n = 2..50,
/// each for both the subset sum gap and the knapsack gain.
std::vector<FigureRow> figure_data(FigureKind figure, const RunOptions& opt);

/// Chi-square test of the Blind-Greedy critical index on unconditioned
/// instances against P(K=0) = 1/2, P(K=l) = 1/(2n), at alpha = 0.01.
ChiSquareResult chi_square_uniform_critical(int n, const RunOptions& opt);

/// One statistical check: statistic vs threshold, pass iff below it unless
/// the check is a plain predicate (threshold then reports the tolerance).
struct CheckLine {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

/// Gap law: KS of conditioned greedy gaps against 2g - g^2, plus a
/// four-sigma check of the mean against 1/3.
std::vector<CheckLine> verify_gap_dist(int n, const RunOptions& opt);

/// Critical-index law: the chi-square test above.
std::vector<CheckLine> verify_critical_uniform(int n, const RunOptions& opt);

/// Critical-weight law given K = k: KS of the critical weight against w^2,
/// and pooled non-critical weights against uniformity.
std::vector<CheckLine> verify_wk_density(int n, int k, const RunOptions& opt);

/// Gap-given-critical-weight law: G / W_k is uniform on [0,1] given K = k.
std::vector<CheckLine> verify_gap_given_wk(int n, int k,
                                           const RunOptions& opt);

/// Conditional independence given (K, G): non-critical weights stay uniform,
/// and within each of 20 gap bins the rescaled critical weight
/// (w_k - g)/(1 - g) is uniform; per-bin tests run at a Bonferroni-corrected
/// level 0.01/20.
std::vector<CheckLine> verify_cond_indep(int n, int k, const RunOptions& opt);

}  // namespace rollout
