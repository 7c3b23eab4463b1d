#pragma once

#include <cstdint>
#include <string_view>

#include "pasim/config.hpp"

namespace pasim {

enum class Scheme { wdma, noma };
enum class Provenance { analytic, asymptotic, monte_carlo };

const char* to_string(Scheme s);
const char* to_string(Provenance p);
Scheme scheme_from_string(std::string_view name);

struct McSpec {
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  Scheme scheme = Scheme::wdma;
  Ue user = Ue::first;
  /// 0 picks std::thread::hardware_concurrency(). The estimate does not
  /// depend on this value.
  unsigned workers = 0;
};

struct MetricEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  Provenance provenance = Provenance::monte_carlo;
};

/// Trials are reduced in fixed blocks of this many, combined in block order.
inline constexpr std::uint64_t kMcBlockTrials = 4096;

/// Fraction of placements with SINR <= outage_threshold, with binomial
/// standard error sqrt(p (1 - p) / T). Throws std::invalid_argument for
/// trials == 0 or non-positive power.
MetricEstimate mc_outage(const McSpec& spec, const SystemConfig& cfg, double power_w);

/// Sample mean of log2(1 + SINR) and its standard error.
MetricEstimate mc_rate(const McSpec& spec, const SystemConfig& cfg, double power_w);

/// SINR of `user` for trial `trial` under `seed`, computed from raw distances.
double mc_trial_sinr(const SystemConfig& cfg, Scheme scheme, Ue user, double power_w,
                     std::uint64_t seed, std::uint64_t trial);

}  // namespace pasim
