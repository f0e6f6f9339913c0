#include <array>
#include <cmath>
#include <stdexcept>

#include "rollout/experiments.hpp"
#include "rollout/greedy.hpp"

namespace rollout {

namespace {

constexpr double kAlpha = 0.01;
constexpr int kGapBins = 20;

void require_lemma_args(int n, int k, std::uint64_t trials) {
  if (n < 1) throw std::invalid_argument("verify: n must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("verify: k must be in 1..n");
  if (trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
}

CheckLine ks_line(std::string name, KsResult r, std::string note = {}) {
  return {std::move(name), r.statistic, r.critical, r.pass, std::move(note)};
}

}  // namespace

std::vector<CheckLine> verify_gap_dist(int n, const RunOptions& opt) {
  if (n < 1) throw std::invalid_argument("verify_gap_dist: n must be >= 1");
  const ModelConfig cfg{n, ProblemKind::SubsetSum, true};
  std::vector<double> gaps(opt.trials);
  RunningStats rs;
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    gaps[t] = blind_greedy(sample_instance(cfg, {opt.master_seed, t})).gap;
    rs.add(gaps[t]);
  }

  std::vector<CheckLine> lines;
  lines.push_back(ks_line("gap-ks-vs-2g-g2",
                          ks_test(std::move(gaps), greedy_gap_cdf)));

  const double dev = std::fabs(rs.mean() - 1.0 / 3.0);
  const double tol = 4.0 * rs.std_error();
  lines.push_back({"gap-mean-vs-1/3", dev, tol, dev < tol,
                   "mean " + std::to_string(rs.mean())});
  return lines;
}

std::vector<CheckLine> verify_critical_uniform(int n, const RunOptions& opt) {
  const ChiSquareResult r = chi_square_uniform_critical(n, opt);
  return {{"critical-chi-square", r.statistic, r.critical, r.pass,
           "dof " + std::to_string(r.dof)}};
}

std::vector<CheckLine> verify_wk_density(int n, int k, const RunOptions& opt) {
  require_lemma_args(n, k, opt.trials);
  const ModelConfig cfg{n, ProblemKind::SubsetSum, false};
  std::vector<double> wk(opt.trials);
  std::vector<double> others;
  others.reserve(opt.trials * static_cast<std::size_t>(n - 1));
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    const Instance inst =
        sample_conditioned_on_critical(cfg, k, {opt.master_seed, t});
    wk[t] = inst.weights()[static_cast<std::size_t>(k) - 1];
    for (int i = 0; i < n; ++i) {
      if (i != k - 1) others.push_back(inst.weights()[i]);
    }
  }

  std::vector<CheckLine> lines;
  lines.push_back(ks_line(
      "wk-ks-vs-w2",
      ks_test(std::move(wk), [](double w) { return w * w; })));
  if (!others.empty()) {
    lines.push_back(ks_line(
        "noncritical-ks-uniform",
        ks_test(std::move(others), [](double w) { return w; })));
  }
  return lines;
}

std::vector<CheckLine> verify_gap_given_wk(int n, int k,
                                           const RunOptions& opt) {
  require_lemma_args(n, k, opt.trials);
  const ModelConfig cfg{n, ProblemKind::SubsetSum, false};
  std::vector<double> ratio(opt.trials);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    const Instance inst =
        sample_conditioned_on_critical(cfg, k, {opt.master_seed, t});
    const double g = blind_greedy(inst).gap;
    // The critical weight strictly exceeds the gap, so the ratio is in [0,1).
    ratio[t] = g / inst.weights()[static_cast<std::size_t>(k) - 1];
  }
  return {ks_line("gap-over-wk-ks-uniform",
                  ks_test(std::move(ratio), [](double u) { return u; }))};
}

std::vector<CheckLine> verify_cond_indep(int n, int k, const RunOptions& opt) {
  require_lemma_args(n, k, opt.trials);
  const ModelConfig cfg{n, ProblemKind::SubsetSum, false};

  std::array<std::vector<double>, kGapBins> rescaled;
  std::vector<double> others;
  others.reserve(opt.trials * static_cast<std::size_t>(n - 1));
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    const Instance inst =
        sample_conditioned_on_critical(cfg, k, {opt.master_seed, t});
    const double g = blind_greedy(inst).gap;
    const double wk = inst.weights()[static_cast<std::size_t>(k) - 1];
    int bin = static_cast<int>(g * kGapBins);
    if (bin >= kGapBins) bin = kGapBins - 1;
    // Given G = g, the critical weight is uniform on [g,1]; rescale with the
    // sample's own g so every bin should look U[0,1].
    rescaled[static_cast<std::size_t>(bin)].push_back((wk - g) / (1.0 - g));
    for (int i = 0; i < n; ++i) {
      if (i != k - 1) others.push_back(inst.weights()[i]);
    }
  }

  std::vector<CheckLine> lines;
  if (!others.empty()) {
    lines.push_back(ks_line(
        "noncritical-ks-uniform",
        ks_test(std::move(others), [](double w) { return w; })));
  }
  const double bonferroni = kAlpha / kGapBins;
  for (int b = 0; b < kGapBins; ++b) {
    auto& samples = rescaled[static_cast<std::size_t>(b)];
    const std::string name = "wk-uniform-gap-bin-" + std::to_string(b);
    if (samples.size() < 25) {
      lines.push_back({name, 0.0, 0.0, true,
                       "skipped: only " + std::to_string(samples.size()) +
                           " samples"});
      continue;
    }
    const std::size_t count = samples.size();
    lines.push_back(ks_line(
        name,
        ks_test_alpha(std::move(samples), [](double u) { return u; },
                      bonferroni),
        std::to_string(count) + " samples"));
  }
  return lines;
}

}  // namespace rollout
