#include "rollout/experiments.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "rollout/greedy.hpp"
#include "rollout/rollout.hpp"

namespace rollout {

namespace {

constexpr std::uint64_t kChunkSize = 4096;

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

double eval_metric(Metric metric, int n, TrialSeed seed) {
  const ModelConfig cfg{n, metric_problem(metric), true};
  const Instance inst = sample_instance(cfg, seed);
  switch (metric) {
    case Metric::GreedyGap:
      return blind_greedy(inst).gap;
    case Metric::ConsecSSGap:
      return first_iteration_consecutive(inst).min_gap;
    case Metric::ConsecKPGain:
      return first_iteration_consecutive(inst).gain;
    case Metric::ExhSSGap:
      return first_iteration_exhaustive(inst).min_gap;
    case Metric::ExhKPGain:
      return first_iteration_exhaustive(inst).gain;
    case Metric::ConsecSSGapFull:
      return inst.capacity() - consecutive_rollout(inst).value;
    case Metric::ConsecKPGainFull:
      return consecutive_rollout(inst).value - blind_greedy(inst).value;
    case Metric::ExhSSGapFull:
      return inst.capacity() - exhaustive_rollout(inst).value;
    case Metric::ExhKPGainFull:
      return exhaustive_rollout(inst).value - blind_greedy(inst).value;
  }
  throw std::logic_error("eval_metric: unknown metric");
}

}  // namespace

const char* metric_name(Metric metric) {
  switch (metric) {
    case Metric::GreedyGap:
      return "GreedyGap";
    case Metric::ConsecSSGap:
      return "ConsecSSGap";
    case Metric::ConsecKPGain:
      return "ConsecKPGain";
    case Metric::ExhSSGap:
      return "ExhSSGap";
    case Metric::ExhKPGain:
      return "ExhKPGain";
    case Metric::ConsecSSGapFull:
      return "ConsecSSGapFull";
    case Metric::ConsecKPGainFull:
      return "ConsecKPGainFull";
    case Metric::ExhSSGapFull:
      return "ExhSSGapFull";
    case Metric::ExhKPGainFull:
      return "ExhKPGainFull";
  }
  return "unknown";
}

ProblemKind metric_problem(Metric metric) {
  switch (metric) {
    case Metric::ConsecKPGain:
    case Metric::ExhKPGain:
    case Metric::ConsecKPGainFull:
    case Metric::ExhKPGainFull:
      return ProblemKind::Knapsack;
    default:
      return ProblemKind::SubsetSum;
  }
}

Estimate run_metric(Metric metric, int n, const RunOptions& opt) {
  if (opt.trials < 1) {
    throw std::invalid_argument("run_metric: trials must be >= 1");
  }
  if (n < 1) throw std::invalid_argument("run_metric: n must be >= 1");

  const std::uint64_t chunks = (opt.trials + kChunkSize - 1) / kChunkSize;
  std::vector<RunningStats> acc(chunks);
  std::atomic<std::uint64_t> next_chunk{0};

  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t lo = c * kChunkSize;
      const std::uint64_t hi = std::min(opt.trials, lo + kChunkSize);
      RunningStats rs;
      for (std::uint64_t t = lo; t < hi; ++t) {
        rs.add(eval_metric(metric, n, {opt.master_seed, t}));
      }
      acc[c] = rs;
    }
  };

  const int workers = std::min<std::uint64_t>(resolve_workers(opt.workers),
                                              chunks);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // Pairwise merge in chunk order; independent of which worker ran a chunk.
  while (acc.size() > 1) {
    std::vector<RunningStats> merged;
    merged.reserve(acc.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < acc.size(); i += 2) {
      RunningStats rs = acc[i];
      rs.merge(acc[i + 1]);
      merged.push_back(rs);
    }
    if (acc.size() % 2 == 1) merged.push_back(acc.back());
    acc = std::move(merged);
  }
  return acc.front().estimate();
}

std::vector<FigureRow> figure_data(FigureKind figure, const RunOptions& opt) {
  const int n_min = figure == FigureKind::Consec ? 3 : 2;
  const int n_max = figure == FigureKind::Consec ? 20 : 50;
  const Metric gap_metric =
      figure == FigureKind::Consec ? Metric::ConsecSSGap : Metric::ExhSSGap;
  const Metric gain_metric =
      figure == FigureKind::Consec ? Metric::ConsecKPGain : Metric::ExhKPGain;
  const TheoremTag gap_tag = figure == FigureKind::Consec
                                 ? TheoremTag::ConsecSS
                                 : TheoremTag::ExhSSSum;
  const TheoremTag gain_tag = figure == FigureKind::Consec
                                  ? TheoremTag::ConsecKP
                                  : TheoremTag::ExhKPFull;

  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(2 * (n_max - n_min + 1)));
  for (int n = n_min; n <= n_max; ++n) {
    rows.push_back({figure, gap_metric, n, run_metric(gap_metric, n, opt),
                    bound_value(gap_tag, n)});
  }
  for (int n = n_min; n <= n_max; ++n) {
    rows.push_back({figure, gain_metric, n, run_metric(gain_metric, n, opt),
                    bound_value(gain_tag, n)});
  }
  return rows;
}

ChiSquareResult chi_square_uniform_critical(int n, const RunOptions& opt) {
  if (n < 1) throw std::invalid_argument("chi_square_uniform_critical: n");
  if (opt.trials < 1) {
    throw std::invalid_argument("chi_square_uniform_critical: trials");
  }
  const ModelConfig cfg{n, ProblemKind::SubsetSum, false};
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    const Instance inst = sample_instance(cfg, {opt.master_seed, t});
    ++counts[static_cast<std::size_t>(blind_greedy(inst).critical_index)];
  }
  std::vector<double> probs(static_cast<std::size_t>(n) + 1,
                            1.0 / (2.0 * static_cast<double>(n)));
  probs[0] = 0.5;
  return chi_square_test(counts, probs, 0.01);
}

}  // namespace rollout
