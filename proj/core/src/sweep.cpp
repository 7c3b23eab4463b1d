#include "pasim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>
#include <tuple>

#include "parallel.hpp"
#include "pasim/noma.hpp"
#include "pasim/wdma.hpp"

namespace pasim {

const char* to_string(Metric m) { return m == Metric::outage ? "outage" : "rate"; }

Metric metric_from_string(std::string_view name) {
  if (name == "outage") return Metric::outage;
  if (name == "rate") return Metric::rate;
  throw std::invalid_argument("unknown metric: " + std::string(name));
}

const char* to_string(CrossoverMetric m) {
  return m == CrossoverMetric::rate_sum ? "rate_sum" : "outage_ue";
}

CrossoverMetric crossover_metric_from_string(std::string_view name) {
  if (name == "rate_sum") return CrossoverMetric::rate_sum;
  if (name == "outage_ue") return CrossoverMetric::outage_ue;
  throw std::invalid_argument("unknown crossover metric: " + std::string(name));
}

void validate(const SweepSpec& spec) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (!std::isfinite(spec.snr_db_start)) fail("snr_db_start: must be finite");
  if (!std::isfinite(spec.snr_db_stop)) fail("snr_db_stop: must be finite");
  if (!(spec.snr_db_step > 0.0) || !std::isfinite(spec.snr_db_step)) {
    fail("snr_db_step: must be finite and > 0");
  }
  if (spec.snr_db_start > spec.snr_db_stop) fail("snr_db_start: must be <= snr_db_stop");
  if (spec.schemes.empty()) fail("schemes: at least one scheme is required");
  if (spec.metrics.empty()) fail("metrics: at least one metric is required");
  if (spec.include_mc && spec.mc_trials == 0) fail("mc_trials: must be >= 1");
  if (spec.nodes < 1) fail("nodes: must be >= 1");
}

std::vector<double> snr_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("snr_db_step: must be > 0");
  if (start > stop) throw std::invalid_argument("snr_db_start: must be <= snr_db_stop");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

std::vector<double> snr_linspace(double start, double stop, std::size_t points) {
  if (points == 0) throw std::invalid_argument("points: must be >= 1");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = start;
    return grid;
  }
  const double step = (stop - start) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = start + static_cast<double>(i) * step;
  grid.back() = stop;
  return grid;
}

double analytic_metric(const SystemConfig& cfg, Scheme scheme, Ue user, Metric metric,
                       double power_w, const QuadratureRule& rule) {
  if (scheme == Scheme::wdma) {
    return metric == Metric::outage ? wdma_outage(cfg, power_w, user, rule)
                                    : wdma_avg_rate(cfg, power_w, user, rule);
  }
  return metric == Metric::outage ? noma_outage(cfg, power_w, user, rule)
                                  : noma_rate(cfg, power_w, user, rule);
}

std::optional<double> asymptote_metric(const SystemConfig& cfg, Scheme scheme, Ue user,
                                       Metric metric, const QuadratureRule& rule) {
  if (scheme == Scheme::wdma) {
    return metric == Metric::outage ? wdma_outage_floor(cfg, rule) : wdma_rate_ceiling(cfg, rule);
  }
  if (metric == Metric::outage) {
    if (user == Ue::first) return 0.0;
    return noma_zero_outage_thresholds(cfg).far_power_w ? 0.0 : 1.0;
  }
  if (user == Ue::first) return std::nullopt;
  return noma_rate_far_ceiling(cfg);
}

namespace {

struct CellKey {
  Scheme scheme;
  Ue user;
  Metric metric;
};

std::vector<CellKey> cell_keys(const std::vector<Scheme>& schemes, const std::vector<Metric>& metrics,
                               bool wdma_both_users) {
  std::vector<CellKey> keys;
  for (Scheme s : schemes) {
    const bool both = s == Scheme::noma || wdma_both_users;
    for (Ue u : {Ue::first, Ue::second}) {
      if (u == Ue::second && !both) continue;
      for (Metric m : metrics) keys.push_back({s, u, m});
    }
  }
  return keys;
}

auto row_order(const SweepRow& r) {
  return std::make_tuple(r.snr_db, std::string_view(to_string(r.scheme)), r.user,
                         std::string_view(to_string(r.metric)));
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const SystemConfig& cfg) {
  validate(spec);
  validate(cfg);
  const QuadratureRule rule(spec.nodes, spec.weighting);
  const auto grid = snr_grid(spec.snr_db_start, spec.snr_db_stop, spec.snr_db_step);

  std::vector<CellKey> keys;
  for (const auto& k : cell_keys(spec.schemes, spec.metrics, spec.wdma_both_users)) {
    if (std::none_of(keys.begin(), keys.end(), [&](const CellKey& e) {
          return e.scheme == k.scheme && e.user == k.user && e.metric == k.metric;
        })) {
      keys.push_back(k);
    }
  }

  std::vector<std::optional<double>> asymptotes(keys.size());
  if (spec.include_asymptotes) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      asymptotes[i] = asymptote_metric(cfg, keys[i].scheme, keys[i].user, keys[i].metric, rule);
    }
  }

  const double noise_ref = derive_constants(cfg).noise_w_ue1;
  SweepResult result;
  result.rows.resize(grid.size() * keys.size());
  detail::parallel_for(result.rows.size(), spec.workers, [&](std::uint64_t idx) {
    const std::size_t gi = idx / keys.size();
    const CellKey& key = keys[idx % keys.size()];
    const double power = snr_db_to_power_w(grid[gi], noise_ref);

    SweepRow row;
    row.snr_db = grid[gi];
    row.scheme = key.scheme;
    row.user = index_of(key.user);
    row.metric = key.metric;
    row.analytic = analytic_metric(cfg, key.scheme, key.user, key.metric, power, rule);
    row.asymptote = asymptotes[idx % keys.size()];
    if (spec.include_mc) {
      McSpec mc{spec.mc_trials, spec.mc_seed, key.scheme, key.user, 1};
      const auto est = key.metric == Metric::outage ? mc_outage(mc, cfg, power)
                                                    : mc_rate(mc, cfg, power);
      row.mc_value = est.value;
      row.mc_std_error = est.std_error;
    }
    result.rows[idx] = row;
  });

  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const SweepRow& a, const SweepRow& b) { return row_order(a) < row_order(b); });
  return result;
}

double crossover_difference(const SystemConfig& cfg, CrossoverMetric metric, double snr_db,
                            const QuadratureRule& rule) {
  const double power = snr_db_to_power_w(snr_db, derive_constants(cfg).noise_w_ue1);
  if (metric == CrossoverMetric::rate_sum) {
    const double noma = noma_rate_near(cfg, power) + noma_rate_far(cfg, power, rule);
    const double wdma = wdma_avg_rate(cfg, power, Ue::first, rule) +
                        wdma_avg_rate(cfg, power, Ue::second, rule);
    return noma - wdma;
  }
  return noma_outage_far(cfg, power, rule) - wdma_outage(cfg, power, Ue::first, rule);
}

std::optional<double> find_crossover(const SystemConfig& cfg, CrossoverMetric metric,
                                     double lo_db, double hi_db, const QuadratureRule& rule,
                                     double tol_db) {
  if (!(hi_db > lo_db)) throw std::invalid_argument("bracket: upper SNR must exceed lower SNR");
  if (!(tol_db > 0.0)) throw std::invalid_argument("tol_db: must be > 0");

  auto eval = [&](double snr) {
    const double v = crossover_difference(cfg, metric, snr, rule);
    if (!std::isfinite(v)) {
      throw NumericalError(std::string("non-finite ") + to_string(metric) + " difference at " +
                           std::to_string(snr) + " dB");
    }
    return v;
  };

  double lo = lo_db;
  double hi = hi_db;
  double f_lo = eval(lo);
  const double f_hi = eval(hi);
  if (f_lo == 0.0 || f_hi == 0.0 || std::signbit(f_lo) == std::signbit(f_hi)) return std::nullopt;

  while (hi - lo > tol_db) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = eval(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const ValidationCell& c) { return !c.pass; }));
}

double cell_tolerance(Metric metric, double analytic, const MetricEstimate& mc, double sigma_tol) {
  double se = mc.std_error;
  if (metric == Metric::outage && (mc.value == 0.0 || mc.value == 1.0)) {
    const double p = std::clamp(analytic, 0.0, 1.0);
    se = std::sqrt(p * (1.0 - p) / static_cast<double>(mc.trials));
  }
  const double statistical = sigma_tol * se;
  if (metric == Metric::outage) return statistical;
  return std::max(statistical, 0.01 * std::abs(analytic));
}

ValidationReport run_validation(const SystemConfig& cfg, std::span<const double> snr_db,
                                std::uint64_t trials, std::uint64_t seed, double sigma_tol,
                                const QuadratureRule& rule, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("trials: must be >= 1");
  if (snr_db.empty()) throw std::invalid_argument("grid: at least one SNR point is required");
  validate(cfg);

  const auto keys = cell_keys({Scheme::wdma, Scheme::noma}, {Metric::outage, Metric::rate}, true);
  const double noise_ref = derive_constants(cfg).noise_w_ue1;

  ValidationReport report;
  report.sigma_tol = sigma_tol;
  report.cells.resize(snr_db.size() * keys.size());
  detail::parallel_for(report.cells.size(), workers, [&](std::uint64_t idx) {
    const std::size_t gi = idx / keys.size();
    const CellKey& key = keys[idx % keys.size()];
    const double power = snr_db_to_power_w(snr_db[gi], noise_ref);

    ValidationCell cell;
    cell.snr_db = snr_db[gi];
    cell.scheme = key.scheme;
    cell.user = index_of(key.user);
    cell.metric = key.metric;
    cell.analytic = analytic_metric(cfg, key.scheme, key.user, key.metric, power, rule);
    McSpec mc{trials, seed, key.scheme, key.user, 1};
    cell.mc = key.metric == Metric::outage ? mc_outage(mc, cfg, power) : mc_rate(mc, cfg, power);
    cell.tolerance = cell_tolerance(key.metric, cell.analytic, cell.mc, sigma_tol);
    cell.pass = std::abs(cell.analytic - cell.mc.value) <= cell.tolerance;
    report.cells[idx] = cell;
  });
  return report;
}

void write_report(std::ostream& out, const ValidationReport& report) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(6);
  for (const auto& c : report.cells) {
    out << (c.pass ? "PASS " : "FAIL ") << std::setw(8) << std::fixed << std::setprecision(2)
        << c.snr_db << " dB  " << to_string(c.scheme) << " ue" << c.user << ' ' << std::setw(6)
        << to_string(c.metric) << std::defaultfloat << std::setprecision(6)
        << "  analytic=" << c.analytic << "  mc=" << c.mc.value << " +/- " << c.mc.std_error
        << "  |diff|=" << std::abs(c.analytic - c.mc.value) << "  tol=" << c.tolerance << '\n';
  }
  out << report.failures() << " of " << report.cells.size() << " cells failed (sigma_tol = "
      << report.sigma_tol << ")\n";
  out.flags(flags);
  out.precision(precision);
}

}  // namespace pasim
