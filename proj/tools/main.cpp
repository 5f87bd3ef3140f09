#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cimono/ci_length.hpp"
#include "cimono/crossing.hpp"
#include "cimono/monte_carlo.hpp"
#include "cimono/nef.hpp"
#include "cimono/table.hpp"
#include "cimono/types.hpp"
#include "cimono/verify.hpp"

namespace {

using cimono::Cell;
using cimono::Table;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;  // numerical failure or failed verify check
constexpr int kExitUsage = 2;        // bad flags or out-of-domain parameters

struct CommonFlags {
  std::string format = "csv";
  std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", flags.output,
                  "Write the table to this file instead of standard output");
}

int emit(const Table& table, const CommonFlags& flags) {
  const std::string text = cimono::render(table, cimono::parse_format(flags.format));
  if (flags.output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(flags.output);
  if (!out) {
    std::cerr << "cimono: cannot open output file '" << flags.output << "'\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

Cell opt_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

Cell opt_cell(const std::optional<bool>& v) {
  if (v) return *v;
  return std::monostate{};
}

// --- alpha-star -------------------------------------------------------------

struct AlphaStarArgs {
  std::string family;
  double shape = 0.0;
  bool shape_set = false;
  int n_min = 0;
  bool n_min_set = false;
  int n_max = 50;
  CommonFlags common;
};

int run_alpha_star(const AlphaStarArgs& args) {
  const bool gamma_scale = args.family == "gamma-scale";
  if (gamma_scale && !args.shape_set) {
    std::cerr << "cimono alpha-star: --shape is required with --family gamma-scale\n";
    return kExitUsage;
  }
  const int n_min = args.n_min_set ? args.n_min : (gamma_scale ? 1 : 2);
  if (args.n_max < n_min) {
    std::cerr << "cimono alpha-star: --n-max must be >= --n-min\n";
    return kExitUsage;
  }

  Table table({"n", "alpha_star", "alpha_critical", "x_star", "c1", "c2"});
  for (int n = n_min; n <= args.n_max; ++n) {
    try {
      const auto pair = gamma_scale ? cimono::crossing::gamma_scale_pair(n, args.shape)
                                    : cimono::crossing::normal_variance_pair(n);
      const auto report = cimono::crossing::cdf_crossing(pair);
      table.add_row({static_cast<std::int64_t>(n), report.alpha_star.value(),
                     report.alpha_critical.value(), report.x_star.value(),
                     report.c1.value(), report.c2.value()});
    } catch (const cimono::ConvergenceError& e) {
      std::cerr << "cimono alpha-star: numerical failure at n = " << n << ": "
                << e.what() << "\n";
      return kExitCheckFailed;
    } catch (const cimono::ConsistencyError& e) {
      std::cerr << "cimono alpha-star: numerical failure at n = " << n << ": "
                << e.what() << "\n";
      return kExitCheckFailed;
    }
  }
  return emit(table, args.common);
}

// --- length -----------------------------------------------------------------

struct LengthArgs {
  std::string family;
  double shape = 1.0;
  double scale = 1.0;
  double sigma_sq = 1.0;
  double sigma = 1.0;
  double theta = 0.0;
  bool theta_set = false;
  double alpha = 0.0;
  int n_min = 0;
  bool n_min_set = false;
  int n_max = 50;
  CommonFlags common;
};

cimono::ci::CiFamily make_family(const LengthArgs& args) {
  using namespace cimono::ci;
  if (args.family == "gamma-scale") return GammaScaleFamily(args.shape, args.scale);
  if (args.family == "normal-variance")
    return NormalVarianceFamily(0.0, args.sigma_sq);
  if (args.family == "normal-mean") return NormalMeanFamily(0.0, args.sigma);
  if (args.family == "pareto") return ParetoFamily(args.theta_set ? args.theta : 2.0);
  return UniformScaleFamily(args.theta_set ? args.theta : 1.0);
}

int run_length(const LengthArgs& args) {
  const cimono::ci::CiFamily family = make_family(args);
  const int n_min = args.n_min_set ? args.n_min : cimono::ci::family_min_n(family);

  Table table({"n", "length", "alpha_star", "alpha_critical", "below_alpha_star"});
  const auto curve =
      cimono::ci::monotonicity_scan(family, args.alpha, n_min, args.n_max);
  for (const auto& rec : curve.records)
    table.add_row({static_cast<std::int64_t>(rec.n), rec.length,
                   opt_cell(rec.alpha_star), opt_cell(rec.alpha_critical),
                   opt_cell(rec.below_alpha_star)});
  return emit(table, args.common);
}

// --- verify -----------------------------------------------------------------

int run_verify(const std::string& suite, const CommonFlags& common) {
  const auto checks = cimono::verify::verify_suite(suite);
  Table table({"check_id", "passed", "margin"});
  bool all_passed = true;
  for (const auto& chk : checks) {
    table.add_row({chk.id, chk.passed, chk.margin});
    all_passed = all_passed && chk.passed;
  }
  const int rc = emit(table, common);
  if (rc != kExitOk) return rc;
  return all_passed ? kExitOk : kExitCheckFailed;
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  LengthArgs base;  // family + parameters reused
  int n = 0;
  int reps = 100000;
  std::uint64_t seed = 42;
};

int run_simulate(const SimulateArgs& args) {
  const cimono::ci::CiFamily family = make_family(args.base);
  const cimono::mc::McConfig config{family, args.n,
                                    cimono::Probability(args.base.alpha), args.reps,
                                    args.seed};
  const cimono::mc::McReport rep = cimono::mc::simulate(config);
  Table table({"family", "n", "alpha", "replications", "seed", "coverage_hat",
               "se_coverage", "mean_length_hat", "se_length"});
  table.add_row({std::string(cimono::ci::family_name(family)),
                 static_cast<std::int64_t>(args.n), args.base.alpha,
                 static_cast<std::int64_t>(rep.replications_used),
                 static_cast<std::int64_t>(args.seed), rep.coverage_hat,
                 rep.se_coverage, rep.mean_length_hat, rep.se_length});
  return emit(table, args.base.common);
}

// --- nef --------------------------------------------------------------------

struct NefArgs {
  std::string generator;
  double theta = 0.0;
  double alpha = 0.0;
  int n_min = 1;
  int n_max = 20;
  int reps = 100000;
  std::uint64_t seed = 42;
  CommonFlags common;
};

int run_nef(const NefArgs& args) {
  const cimono::nef::NefModel model = args.generator == "gaussian"
                                          ? cimono::nef::gaussian_generator()
                                          : cimono::nef::exponential_generator();
  const auto curve = cimono::nef::mean_length_scan(
      model, args.theta, args.alpha, args.n_min, args.n_max, args.reps, args.seed);
  Table table({"n", "mean_length", "se", "closed_form"});
  for (const auto& rec : curve.records)
    table.add_row({static_cast<std::int64_t>(rec.n), rec.mean_length, rec.se,
                   opt_cell(rec.closed_form)});
  return emit(table, args.common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Mean lengths of classical confidence intervals, gamma CDF crossing "
      "points, and the numerical checks behind their monotonicity in the "
      "sample size"};
  app.require_subcommand(1);

  AlphaStarArgs as_args;
  auto* as_cmd = app.add_subcommand(
      "alpha-star",
      "Crossing probability alpha* and critical level per sample size");
  as_cmd->add_option("--family", as_args.family, "gamma-scale or normal-variance")
      ->required()
      ->check(CLI::IsMember({"gamma-scale", "normal-variance"}));
  as_cmd->add_option("--shape", as_args.shape, "Known shape a (gamma-scale only)")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { as_args.shape_set = true; });
  as_cmd->add_option("--n-min", as_args.n_min, "First sample size (default 1 resp. 2)")
      ->each([&](const std::string&) { as_args.n_min_set = true; });
  as_cmd->add_option("--n-max", as_args.n_max, "Last sample size (default 50)");
  add_common(as_cmd, as_args.common);

  LengthArgs len_args;
  auto* len_cmd =
      app.add_subcommand("length", "Mean interval length L_n over a range of n");
  len_cmd->add_option("--family", len_args.family, "Interval family")
      ->required()
      ->check(CLI::IsMember({"gamma-scale", "normal-variance", "normal-mean",
                             "pareto", "uniform"}));
  len_cmd->add_option("--shape", len_args.shape, "Known gamma shape a (default 1)");
  len_cmd->add_option("--scale", len_args.scale, "True gamma scale beta (default 1)");
  len_cmd->add_option("--sigma-sq", len_args.sigma_sq,
                      "True normal variance (default 1)");
  len_cmd->add_option("--sigma", len_args.sigma, "True normal sd (default 1)");
  len_cmd->add_option("--theta", len_args.theta,
                      "True Pareto/uniform parameter (defaults 2 resp. 1)")
      ->each([&](const std::string&) { len_args.theta_set = true; });
  len_cmd->add_option("--alpha", len_args.alpha, "Interval level complement")
      ->required();
  len_cmd->add_option("--n-min", len_args.n_min, "First n (default: family minimum)")
      ->each([&](const std::string&) { len_args.n_min_set = true; });
  len_cmd->add_option("--n-max", len_args.n_max, "Last n (default 50)");
  add_common(len_cmd, len_args.common);

  std::string suite = "all";
  CommonFlags verify_common;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the documented invariant suites and report margins");
  verify_cmd->add_option("--suite", suite, "Suite name (default all)")
      ->check(CLI::IsMember(
          {"lemma2", "en-chain", "ordering", "crossing", "monotonicity", "all"}));
  add_common(verify_cmd, verify_common);

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Monte Carlo coverage and mean length of one configuration");
  sim_cmd->add_option("--family", sim_args.base.family, "Interval family")
      ->required()
      ->check(CLI::IsMember({"gamma-scale", "normal-variance", "normal-mean",
                             "pareto", "uniform"}));
  sim_cmd->add_option("--shape", sim_args.base.shape, "Known gamma shape a");
  sim_cmd->add_option("--scale", sim_args.base.scale, "True gamma scale beta");
  sim_cmd->add_option("--sigma-sq", sim_args.base.sigma_sq, "True normal variance");
  sim_cmd->add_option("--sigma", sim_args.base.sigma, "True normal sd");
  sim_cmd->add_option("--theta", sim_args.base.theta, "True Pareto/uniform parameter")
      ->each([&](const std::string&) { sim_args.base.theta_set = true; });
  sim_cmd->add_option("--n", sim_args.n, "Sample size")->required();
  sim_cmd->add_option("--alpha", sim_args.base.alpha, "Interval level complement")
      ->required();
  sim_cmd->add_option("--reps", sim_args.reps, "Replications (default 100000)");
  sim_cmd->add_option("--seed", sim_args.seed, "Master seed (default 42)");
  add_common(sim_cmd, sim_args.base.common);

  NefArgs nef_args;
  auto* nef_cmd = app.add_subcommand(
      "nef", "Mean length of the quantile-inversion NEF interval per n");
  nef_cmd->add_option("--generator", nef_args.generator, "gaussian or exponential")
      ->required()
      ->check(CLI::IsMember({"gaussian", "exponential"}));
  nef_cmd->add_option("--theta", nef_args.theta, "True parameter (default 0)");
  nef_cmd->add_option("--alpha", nef_args.alpha, "Interval level complement")
      ->required();
  nef_cmd->add_option("--n-min", nef_args.n_min, "First n (default 1)");
  nef_cmd->add_option("--n-max", nef_args.n_max, "Last n (default 20)");
  nef_cmd->add_option("--reps", nef_args.reps, "Replications (default 100000)");
  nef_cmd->add_option("--seed", nef_args.seed, "Master seed (default 42)");
  add_common(nef_cmd, nef_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text on stdout, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    if (as_cmd->parsed()) return run_alpha_star(as_args);
    if (len_cmd->parsed()) return run_length(len_args);
    if (verify_cmd->parsed()) return run_verify(suite, verify_common);
    if (sim_cmd->parsed()) return run_simulate(sim_args);
    if (nef_cmd->parsed()) return run_nef(nef_args);
  } catch (const cimono::ConvergenceError& e) {
    std::cerr << "cimono: numerical failure: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const cimono::ConsistencyError& e) {
    std::cerr << "cimono: numerical failure: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const cimono::RangeError& e) {
    std::cerr << "cimono: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::domain_error& e) {
    std::cerr << "cimono: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cimono: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
