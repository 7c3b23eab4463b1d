// pasim: analytic and Monte Carlo performance sweeps for two-user pinching
// antenna downlinks (WDMA and NOMA).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pasim/config.hpp"
#include "pasim/montecarlo.hpp"
#include "pasim/quadrature.hpp"
#include "pasim/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::string config_path;
  std::string out_path;
  int nodes = pasim::kDefaultNodes;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100'000;
  std::string weights = "fejer";
  unsigned workers = 0;
};

struct SweepArgs {
  double start = 90.0;
  double stop = 150.0;
  double step = 2.0;
  std::vector<std::string> schemes{"wdma", "noma"};
  std::vector<std::string> metrics{"outage", "rate"};
  bool mc = false;
  bool asymptotes = false;
  bool both_users = false;
};

struct ValidateArgs {
  double start = 90.0;
  double stop = 150.0;
  std::size_t points = 10;
  double sigma_tol = 3.0;
};

struct CrossoverArgs {
  std::string metric = "rate_sum";
  double lo = 90.0;
  double hi = 150.0;
  double tol = 0.01;
};

struct McArgs {
  std::string scheme = "wdma";
  int user = 1;
  std::string metric = "outage";
  double snr_db = 120.0;
};

pasim::SystemConfig load(const Globals& g) {
  if (g.config_path.empty()) return pasim::SystemConfig{};
  return pasim::load_config(g.config_path);
}

pasim::QuadratureRule rule_of(const Globals& g) {
  return pasim::QuadratureRule(g.nodes, pasim::weighting_from_string(g.weights));
}

pasim::Ue ue_of(int user) {
  if (user != 1 && user != 2) throw std::invalid_argument("user: must be 1 or 2");
  return static_cast<pasim::Ue>(user);
}

// Writes to --out when given, stdout otherwise.
template <class Fn>
void emit(const Globals& g, Fn&& fn) {
  if (g.out_path.empty()) {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("--out: cannot open " + g.out_path);
  fn(file);
  if (!file.flush()) throw std::runtime_error("--out: write failed for " + g.out_path);
}

int cmd_sweep(const Globals& g, const SweepArgs& a) {
  const auto cfg = load(g);
  pasim::SweepSpec spec;
  spec.snr_db_start = a.start;
  spec.snr_db_stop = a.stop;
  spec.snr_db_step = a.step;
  spec.schemes.clear();
  for (const auto& s : a.schemes) spec.schemes.push_back(pasim::scheme_from_string(s));
  spec.metrics.clear();
  for (const auto& m : a.metrics) spec.metrics.push_back(pasim::metric_from_string(m));
  spec.include_mc = a.mc;
  spec.include_asymptotes = a.asymptotes;
  spec.wdma_both_users = a.both_users;
  spec.mc_trials = g.trials;
  spec.mc_seed = g.seed;
  spec.nodes = g.nodes;
  spec.weighting = pasim::weighting_from_string(g.weights);
  spec.workers = g.workers;

  const auto result = pasim::run_sweep(spec, cfg);
  emit(g, [&](std::ostream& out) { pasim::write_csv(out, result); });
  return kExitOk;
}

int cmd_validate(const Globals& g, const ValidateArgs& a) {
  const auto cfg = load(g);
  const auto grid = pasim::snr_linspace(a.start, a.stop, a.points);
  const auto report =
      pasim::run_validation(cfg, grid, g.trials, g.seed, a.sigma_tol, rule_of(g), g.workers);
  emit(g, [&](std::ostream& out) { pasim::write_report(out, report); });
  return report.all_passed() ? kExitOk : kExitValidation;
}

int cmd_crossover(const Globals& g, const CrossoverArgs& a) {
  const auto cfg = load(g);
  const auto metric = pasim::crossover_metric_from_string(a.metric);
  const auto x = pasim::find_crossover(cfg, metric, a.lo, a.hi, rule_of(g), a.tol);
  emit(g, [&](std::ostream& out) {
    out << "metric,snr_db\n" << pasim::to_string(metric) << ',';
    if (x) {
      out << std::fixed << std::setprecision(4) << *x;
    } else {
      out << "none";
    }
    out << '\n';
  });
  return kExitOk;
}

int cmd_asymptote(const Globals& g) {
  const auto cfg = load(g);
  const auto rule = rule_of(g);
  emit(g, [&](std::ostream& out) {
    out << "scheme,user,metric,asymptote\n" << std::setprecision(17);
    for (auto scheme : {pasim::Scheme::wdma, pasim::Scheme::noma}) {
      for (auto ue : {pasim::Ue::first, pasim::Ue::second}) {
        for (auto metric : {pasim::Metric::outage, pasim::Metric::rate}) {
          const auto v = pasim::asymptote_metric(cfg, scheme, ue, metric, rule);
          out << pasim::to_string(scheme) << ',' << pasim::index_of(ue) << ','
              << pasim::to_string(metric) << ',';
          if (v) out << *v;
          out << '\n';
        }
      }
    }
  });
  return kExitOk;
}

int cmd_mc(const Globals& g, const McArgs& a) {
  const auto cfg = load(g);
  pasim::McSpec spec;
  spec.trials = g.trials;
  spec.seed = g.seed;
  spec.scheme = pasim::scheme_from_string(a.scheme);
  spec.user = ue_of(a.user);
  spec.workers = g.workers;
  const auto metric = pasim::metric_from_string(a.metric);
  const double power = pasim::snr_db_to_power_w(a.snr_db, pasim::derive_constants(cfg).noise_w_ue1);

  const auto est = metric == pasim::Metric::outage ? pasim::mc_outage(spec, cfg, power)
                                                   : pasim::mc_rate(spec, cfg, power);
  const double analytic = pasim::analytic_metric(cfg, spec.scheme, spec.user, metric, power,
                                                 rule_of(g));
  emit(g, [&](std::ostream& out) {
    out << "snr_db,scheme,user,metric,mc_value,mc_std_error,trials,analytic\n"
        << std::setprecision(17) << a.snr_db << ',' << a.scheme << ',' << a.user << ','
        << a.metric << ',' << est.value << ',' << est.std_error << ',' << est.trials << ','
        << analytic << '\n';
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinching-antenna downlink performance sweeps"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_path, "JSON system configuration")->check(CLI::ExistingFile);
  app.add_option("--out", g.out_path, "Output file (default stdout)");
  app.add_option("--nodes", g.nodes, "Quadrature nodes")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Monte Carlo seed");
  app.add_option("--trials", g.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  app.add_option("--weights", g.weights, "Quadrature weighting")
      ->check(CLI::IsMember({"fejer", "chebyshev"}));
  app.add_option("--workers", g.workers, "Worker threads (0 = all cores)");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Emit a CSV of metrics over a transmit-SNR grid");
  sweep->add_option("--start", sweep_args.start, "First SNR, dB");
  sweep->add_option("--stop", sweep_args.stop, "Last SNR, dB");
  sweep->add_option("--step", sweep_args.step, "SNR step, dB");
  sweep->add_option("--scheme", sweep_args.schemes, "wdma and/or noma")
      ->check(CLI::IsMember({"wdma", "noma"}));
  sweep->add_option("--metric", sweep_args.metrics, "outage and/or rate")
      ->check(CLI::IsMember({"outage", "rate"}));
  sweep->add_flag("--mc", sweep_args.mc, "Add Monte Carlo columns");
  sweep->add_flag("--asymptotes", sweep_args.asymptotes, "Add the high-SNR limit column");
  sweep->add_flag("--wdma-both-users", sweep_args.both_users, "Report WDMA UE 2 as well");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Compare analytic metrics against Monte Carlo");
  validate->add_option("--start", validate_args.start, "First SNR, dB");
  validate->add_option("--stop", validate_args.stop, "Last SNR, dB");
  validate->add_option("--points", validate_args.points, "Grid points")
      ->check(CLI::PositiveNumber);
  validate->add_option("--sigma-tol", validate_args.sigma_tol, "Allowed standard errors")
      ->check(CLI::PositiveNumber);

  CrossoverArgs crossover_args;
  auto* crossover = app.add_subcommand("crossover", "Find where NOMA and WDMA swap order");
  crossover->add_option("--metric", crossover_args.metric, "rate_sum or outage_ue")
      ->check(CLI::IsMember({"rate_sum", "outage_ue"}));
  crossover->add_option("--lo", crossover_args.lo, "Bracket start, dB");
  crossover->add_option("--hi", crossover_args.hi, "Bracket end, dB");
  crossover->add_option("--tol", crossover_args.tol, "Bisection tolerance, dB")
      ->check(CLI::PositiveNumber);

  auto* asymptote = app.add_subcommand("asymptote", "Print high-SNR floors and ceilings");

  McArgs mc_args;
  auto* mc = app.add_subcommand("mc", "Single Monte Carlo estimate");
  mc->add_option("--scheme", mc_args.scheme)->check(CLI::IsMember({"wdma", "noma"}));
  mc->add_option("--user", mc_args.user)->check(CLI::IsMember({1, 2}));
  mc->add_option("--metric", mc_args.metric)->check(CLI::IsMember({"outage", "rate"}));
  mc->add_option("--snr", mc_args.snr_db, "Transmit SNR, dB");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*sweep) return cmd_sweep(g, sweep_args);
    if (*validate) return cmd_validate(g, validate_args);
    if (*crossover) return cmd_crossover(g, crossover_args);
    if (*asymptote) return cmd_asymptote(g);
    if (*mc) return cmd_mc(g, mc_args);
  } catch (const pasim::NumericalError& e) {
    std::cerr << "pasim: numerical error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "pasim: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
