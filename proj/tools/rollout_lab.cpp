// rollout_lab: simulation, bound tabulation, figure reproduction, and
// distribution-law verification for rollout algorithms on stochastic subset
// sum and knapsack instances.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rollout/bounds.hpp"
#include "rollout/experiments.hpp"
#include "rollout/greedy.hpp"
#include "rollout/rollout.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kSeedEnvVar = "ROLLOUT_LAB_SEED";
constexpr std::uint64_t kDefaultSeed = 1;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStatFail = 3;

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw std::invalid_argument(std::string(kSeedEnvVar) +
                                " must be an unsigned integer");
  }
  return v;
}

// Every output file begins with one comment line carrying the version and
// the full flag set, so the file can be reproduced from its own header.
std::string header_line(const std::string& command, const std::string& flags) {
  return "# rollout-lab " + std::string(kVersion) + " | " + command + " " +
         flags + "\n";
}

int write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: write to " << path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string problem = "subset-sum";
  std::string algo = "greedy";
  int n = 10;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  int workers = 0;
  std::string out = "-";
};

rollout::Metric pick_metric(const std::string& problem,
                            const std::string& algo) {
  using rollout::Metric;
  const bool kp = problem == "knapsack";
  if (algo == "greedy") return Metric::GreedyGap;
  if (algo == "consec-first")
    return kp ? Metric::ConsecKPGain : Metric::ConsecSSGap;
  if (algo == "exh-first") return kp ? Metric::ExhKPGain : Metric::ExhSSGap;
  if (algo == "consec")
    return kp ? Metric::ConsecKPGainFull : Metric::ConsecSSGapFull;
  return kp ? Metric::ExhKPGainFull : Metric::ExhSSGapFull;  // "exh"
}

int run_simulate(const SimulateArgs& a) {
  const rollout::Metric metric = pick_metric(a.problem, a.algo);
  const rollout::RunOptions opt{a.trials, a.seed, a.workers};
  const rollout::Estimate est = rollout::run_metric(metric, a.n, opt);

  std::ostringstream flags;
  flags << "--problem " << a.problem << " --algo " << a.algo << " --n " << a.n
        << " --trials " << a.trials << " --seed " << a.seed << " --workers "
        << a.workers << " --out " << a.out;

  std::string body = header_line("simulate", flags.str());
  body += "metric,n,trials,mean,stderr,ci_lo,ci_hi,seed\n";
  body += std::string(rollout::metric_name(metric)) + "," +
          std::to_string(a.n) + "," + std::to_string(a.trials) + "," +
          fmt12(est.mean) + "," + fmt12(est.std_error) + "," +
          fmt12(est.ci95.first) + "," + fmt12(est.ci95.second) + "," +
          std::to_string(a.seed) + "\n";
  return write_output(a.out, body);
}

struct BoundsArgs {
  std::string which = "consec-ss";
  int n_min = 3;
  int n_max = 20;
  std::string out = "-";
};

int run_bounds(const BoundsArgs& a) {
  static const std::map<std::string, rollout::TheoremTag> kTags = {
      {"consec-ss", rollout::TheoremTag::ConsecSS},
      {"consec-kp", rollout::TheoremTag::ConsecKP},
      {"exh-ss", rollout::TheoremTag::ExhSSSum},
      {"exh-ss-log", rollout::TheoremTag::ExhSSLog},
      {"exh-kp", rollout::TheoremTag::ExhKPFull},
      {"exh-kp-no-t", rollout::TheoremTag::ExhKPNoT},
  };
  const rollout::TheoremTag tag = kTags.at(a.which);
  if (a.n_min > a.n_max || a.n_min < rollout::bound_min_n(tag)) {
    std::cerr << "error: " << a.which << " requires "
              << rollout::bound_min_n(tag) << " <= n-min <= n-max\n";
    return kExitUsage;
  }
  const rollout::BoundCurve curve =
      rollout::bound_curve(tag, a.n_min, a.n_max);

  std::ostringstream flags;
  flags << "--which " << a.which << " --n-min " << a.n_min << " --n-max "
        << a.n_max << " --out " << a.out;
  std::string body = header_line("bounds", flags.str());
  body += "which,n,value\n";
  for (const auto& [n, value] : curve.points) {
    body += a.which + "," + std::to_string(n) + "," + fmt12(value) + "\n";
  }
  return write_output(a.out, body);
}

struct FigureArgs {
  std::string name = "consec";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  int workers = 0;
  std::string out = "-";
};

int run_figure(const FigureArgs& a) {
  const rollout::FigureKind kind = a.name == "consec"
                                       ? rollout::FigureKind::Consec
                                       : rollout::FigureKind::Exh;
  const rollout::RunOptions opt{a.trials, a.seed, a.workers};
  const std::vector<rollout::FigureRow> rows = rollout::figure_data(kind, opt);

  std::ostringstream flags;
  flags << "--name " << a.name << " --trials " << a.trials << " --seed "
        << a.seed << " --workers " << a.workers << " --out " << a.out;
  std::string body = header_line("figure", flags.str());
  body += "figure,metric,n,mean,stderr,bound\n";
  for (const auto& row : rows) {
    body += a.name + "," + rollout::metric_name(row.metric) + "," +
            std::to_string(row.n) + "," + fmt12(row.simulated.mean) + "," +
            fmt12(row.simulated.std_error) + "," + fmt12(row.bound) + "\n";
  }
  return write_output(a.out, body);
}

struct VerifyArgs {
  std::string lemma = "gap-dist";
  int n = 10;
  int k = 0;  // 0 = choose (n+1)/2
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const int k = a.k > 0 ? a.k : (a.n + 1) / 2;
  const rollout::RunOptions opt{a.trials, a.seed, 1};

  std::vector<rollout::CheckLine> lines;
  if (a.lemma == "gap-dist") {
    lines = rollout::verify_gap_dist(a.n, opt);
  } else if (a.lemma == "critical-uniform") {
    lines = rollout::verify_critical_uniform(a.n, opt);
  } else if (a.lemma == "wk-density") {
    lines = rollout::verify_wk_density(a.n, k, opt);
  } else if (a.lemma == "gap-given-wk") {
    lines = rollout::verify_gap_given_wk(a.n, k, opt);
  } else {
    lines = rollout::verify_cond_indep(a.n, k, opt);
  }

  bool all_pass = true;
  std::cout << "verify " << a.lemma << " (n=" << a.n << ", k=" << k
            << ", trials=" << a.trials << ", seed=" << a.seed << ")\n";
  for (const auto& line : lines) {
    all_pass = all_pass && line.pass;
    std::cout << (line.pass ? "  [pass] " : "  [FAIL] ") << line.name
              << ": statistic=" << fmt12(line.statistic)
              << " threshold=" << fmt12(line.threshold);
    if (!line.note.empty()) std::cout << " (" << line.note << ")";
    std::cout << "\n";
  }
  std::cout << (all_pass ? "result: PASS\n" : "result: FAIL\n");

  if (!a.out.empty()) {
    std::ostringstream flags;
    flags << "--lemma " << a.lemma << " --n " << a.n << " --k " << k
          << " --trials " << a.trials << " --seed " << a.seed << " --out "
          << a.out;
    std::string body = header_line("verify", flags.str());
    body += "lemma,check,statistic,threshold,pass\n";
    for (const auto& line : lines) {
      body += a.lemma + "," + line.name + "," + fmt12(line.statistic) + "," +
              fmt12(line.threshold) + "," + (line.pass ? "1" : "0") + "\n";
    }
    const int rc = write_output(a.out, body);
    if (rc != kExitOk) return rc;
  }
  return all_pass ? kExitOk : kExitStatFail;
}

int run_selftest(std::uint64_t seed) {
  using namespace rollout;
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "  [ok]   " : "  [FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };
  auto near = [](double a, double b, double tol) {
    return std::fabs(a - b) <= tol;
  };

  const Instance ex = Instance::subset_sum({0.4, 0.5, 0.3}, 0.6);
  const GreedyOutcome g = blind_greedy(ex);
  check("greedy packs maximal prefix",
        g.packed == std::vector<int>{1} && g.critical_index == 2 &&
            near(g.gap, 0.2, 1e-12));
  const RolloutResult consec = consecutive_rollout(ex);
  check("consecutive rollout picks item 2",
        consec.solution == std::vector<int>{2} &&
            near(consec.value, 0.5, 1e-12));
  const RolloutResult exh = exhaustive_rollout(ex);
  check("exhaustive rollout picks item 2",
        exh.solution == std::vector<int>{2} && near(exh.value, 0.5, 1e-12));
  check("first-iteration insertion gaps",
        near(first_iteration_exhaustive(ex).min_gap, 0.1, 1e-12));

  check("consec ss bound at 3", near(consec_ss_bound(3), 7.0 / 30.0, 1e-15));
  check("consec kp bound at 3",
        near(consec_kp_bound(3), 151.0 / 864.0, 1e-15));
  check("exh ss bound at 2", near(exh_ss_bound(2), 0.25, 1e-15));
  check("harmonic(3)", near(harmonic(3), 11.0 / 6.0, 1e-15));
  check("T(1,0)", near(exh_kp_T(1, 0), 7.0 / 12.0, 1e-15));
  check("gap cdf at 1/2", near(greedy_gap_cdf(0.5), 0.75, 1e-15));
  check("chi-square quantile(0.99, 8)",
        near(chi_square_quantile(0.99, 8.0), 20.0902, 5e-4));

  const ModelConfig cfg{5, ProblemKind::Knapsack, true};
  const Instance s1 = sample_instance(cfg, {seed, 7});
  const Instance s2 = sample_instance(cfg, {seed, 7});
  check("sampling is deterministic",
        s1.weights() == s2.weights() && s1.profits() == s2.profits() &&
            s1.capacity() == s2.capacity());

  const Estimate est = run_metric(Metric::GreedyGap, 5, {20000, seed, 0});
  check("greedy gap mean near 1/3", near(est.mean, 1.0 / 3.0, 0.02));

  std::cout << (failures == 0 ? "selftest: PASS\n" : "selftest: FAIL\n");
  return failures == 0 ? kExitOk : kExitStatFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rollout algorithm simulation and bound verification lab"};
  app.require_subcommand(1);

  SimulateArgs sim;
  BoundsArgs bnd;
  FigureArgs fig;
  VerifyArgs ver;
  std::uint64_t self_seed = 0;

  auto* sim_cmd = app.add_subcommand(
      "simulate", "Monte Carlo estimate of one metric at one n");
  sim_cmd->add_option("--problem", sim.problem)
      ->check(CLI::IsMember({"subset-sum", "knapsack"}));
  sim_cmd->add_option("--algo", sim.algo)
      ->check(CLI::IsMember(
          {"greedy", "consec", "exh", "consec-first", "exh-first"}));
  sim_cmd->add_option("--n", sim.n)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--trials", sim.trials)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim.seed);
  sim_cmd->add_option("--workers", sim.workers)
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--out", sim.out);

  auto* bnd_cmd =
      app.add_subcommand("bounds", "tabulate one closed-form bound curve");
  bnd_cmd->add_option("--which", bnd.which)
      ->check(CLI::IsMember({"consec-ss", "consec-kp", "exh-ss", "exh-ss-log",
                             "exh-kp", "exh-kp-no-t"}));
  bnd_cmd->add_option("--n-min", bnd.n_min)->check(CLI::PositiveNumber);
  bnd_cmd->add_option("--n-max", bnd.n_max)->check(CLI::PositiveNumber);
  bnd_cmd->add_option("--out", bnd.out);

  auto* fig_cmd = app.add_subcommand(
      "figure", "simulation-vs-bound data over the standard n grids");
  fig_cmd->add_option("--name", fig.name)
      ->check(CLI::IsMember({"consec", "exh"}));
  fig_cmd->add_option("--trials", fig.trials)->check(CLI::PositiveNumber);
  fig_cmd->add_option("--seed", fig.seed);
  fig_cmd->add_option("--workers", fig.workers)
      ->check(CLI::NonNegativeNumber);
  fig_cmd->add_option("--out", fig.out);

  auto* ver_cmd = app.add_subcommand(
      "verify", "statistical verification of the distribution laws");
  ver_cmd->add_option("--lemma", ver.lemma)
      ->check(CLI::IsMember({"gap-dist", "critical-uniform", "wk-density",
                             "gap-given-wk", "cond-indep"}));
  ver_cmd->add_option("--n", ver.n)->check(CLI::PositiveNumber);
  ver_cmd->add_option("--k", ver.k)->check(CLI::PositiveNumber);
  ver_cmd->add_option("--trials", ver.trials)->check(CLI::PositiveNumber);
  ver_cmd->add_option("--seed", ver.seed);
  ver_cmd->add_option("--out", ver.out);

  auto* self_cmd =
      app.add_subcommand("selftest", "fast internal consistency checks");
  self_cmd->add_option("--seed", self_seed);

  try {
    app.parse(argc, argv);
    // Seed resolution: explicit flag, then the environment, then a constant.
    if (!sim_cmd->count("--seed") && !fig_cmd->count("--seed") &&
        !ver_cmd->count("--seed") && !self_cmd->count("--seed")) {
      sim.seed = fig.seed = ver.seed = self_seed = default_seed();
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(sim_cmd)) return run_simulate(sim);
    if (app.got_subcommand(bnd_cmd)) return run_bounds(bnd);
    if (app.got_subcommand(fig_cmd)) return run_figure(fig);
    if (app.got_subcommand(ver_cmd)) return run_verify(ver);
    return run_selftest(self_seed);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
