#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pasim/config.hpp"
#include "pasim/montecarlo.hpp"
#include "pasim/quadrature.hpp"

namespace pasim {

enum class Metric { outage, rate };

const char* to_string(Metric m);
Metric metric_from_string(std::string_view name);

/// Transmit-SNR sweep. SNR is relative to the UE 1 noise power.
struct SweepSpec {
  double snr_db_start = 90.0;
  double snr_db_stop = 150.0;
  double snr_db_step = 2.0;
  std::vector<Scheme> schemes{Scheme::wdma, Scheme::noma};
  std::vector<Metric> metrics{Metric::outage, Metric::rate};
  bool include_mc = false;
  bool include_asymptotes = false;
  /// WDMA users are mirror images of each other; by default only UE 1 is
  /// reported. NOMA always reports both.
  bool wdma_both_users = false;
  std::uint64_t mc_trials = 100'000;
  std::uint64_t mc_seed = 1;
  int nodes = kDefaultNodes;
  Weighting weighting = Weighting::fejer;
  unsigned workers = 0;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const SweepSpec& spec);

struct SweepRow {
  double snr_db = 0.0;
  Scheme scheme = Scheme::wdma;
  int user = 1;
  Metric metric = Metric::outage;
  double analytic = 0.0;
  std::optional<double> asymptote;
  std::optional<double> mc_value;
  std::optional<double> mc_std_error;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;

  bool operator==(const SweepResult&) const = default;
};

/// start, start + step, ... up to stop (inclusive within 1e-9 step).
std::vector<double> snr_grid(double start, double stop, double step);
/// `points` equally spaced values from start to stop inclusive.
std::vector<double> snr_linspace(double start, double stop, std::size_t points);

double analytic_metric(const SystemConfig& cfg, Scheme scheme, Ue user, Metric metric,
                       double power_w, const QuadratureRule& rule = default_rule());

/// High-SNR limit of a metric, or nothing when it grows without bound
/// (NOMA near-user rate).
std::optional<double> asymptote_metric(const SystemConfig& cfg, Scheme scheme, Ue user,
                                       Metric metric, const QuadratureRule& rule = default_rule());

/// Rows are ordered by (snr_db, scheme name, user, metric name).
SweepResult run_sweep(const SweepSpec& spec, const SystemConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "snr_db,scheme,user,metric,analytic,asymptote,mc_value,mc_std_error";

/// Numbers are written in shortest round-trip form; absent values are empty.
void write_csv(std::ostream& out, const SweepResult& result);
/// Throws std::runtime_error with the line number on malformed input.
SweepResult read_csv(std::istream& in);

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CrossoverMetric {
  rate_sum,   ///< NOMA sum rate minus WDMA sum rate
  outage_ue,  ///< NOMA far-user outage minus WDMA UE 1 outage
};

const char* to_string(CrossoverMetric m);
CrossoverMetric crossover_metric_from_string(std::string_view name);

double crossover_difference(const SystemConfig& cfg, CrossoverMetric metric, double snr_db,
                            const QuadratureRule& rule = default_rule());

/// Bisection on crossover_difference over [lo_db, hi_db] down to `tol_db`.
/// Returns nothing unless the endpoint values are nonzero with opposite signs.
/// Throws NumericalError on a non-finite difference and std::invalid_argument
/// when hi_db <= lo_db.
std::optional<double> find_crossover(const SystemConfig& cfg, CrossoverMetric metric,
                                     double lo_db, double hi_db,
                                     const QuadratureRule& rule = default_rule(),
                                     double tol_db = 0.01);

struct ValidationCell {
  double snr_db = 0.0;
  Scheme scheme = Scheme::wdma;
  int user = 1;
  Metric metric = Metric::outage;
  double analytic = 0.0;
  MetricEstimate mc;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  double sigma_tol = 3.0;
  std::vector<ValidationCell> cells;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Allowed |analytic - mc| for one cell: sigma_tol standard errors for outage,
/// max(sigma_tol standard errors, 1% of |analytic|) for rate. An outage
/// estimate of exactly 0 or 1 has a zero binomial standard error; the
/// standard error implied by the analytic value is used instead.
double cell_tolerance(Metric metric, double analytic, const MetricEstimate& mc,
                      double sigma_tol);

/// Compares every (scheme, user, metric, SNR) cell against Monte Carlo.
/// Throws std::invalid_argument for trials == 0 or an empty grid.
ValidationReport run_validation(const SystemConfig& cfg, std::span<const double> snr_db,
                                std::uint64_t trials, std::uint64_t seed, double sigma_tol,
                                const QuadratureRule& rule = default_rule(),
                                unsigned workers = 0);

void write_report(std::ostream& out, const ValidationReport& report);

}  // namespace pasim
