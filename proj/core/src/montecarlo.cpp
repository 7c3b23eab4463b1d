#include "pasim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "pasim/geometry.hpp"
#include "pasim/rng.hpp"

namespace pasim {

const char* to_string(Scheme s) { return s == Scheme::wdma ? "wdma" : "noma"; }

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::analytic: return "analytic";
    case Provenance::asymptotic: return "asymptotic";
    case Provenance::monte_carlo: return "monte-carlo";
  }
  return "unknown";
}

Scheme scheme_from_string(std::string_view name) {
  if (name == "wdma") return Scheme::wdma;
  if (name == "noma") return Scheme::noma;
  throw std::invalid_argument("unknown scheme: " + std::string(name));
}

namespace {

struct Link {
  double eta;
  double noise_ue1;
  double noise_ue2;
};

double wdma_trial(const SystemConfig& cfg, const Link& link, Ue user, double power_w,
                  TrialStream& rng) {
  const auto p = sample_wdma(cfg, rng);
  const bool first = user == Ue::first;
  const double x = first ? p.x_ue1 : p.x_ue2;
  const double noise = first ? link.noise_ue1 : link.noise_ue2;
  const double dx = x - 0.5 * cfg.region_x_m;
  const double dy = p.y_ue1 - p.y_ue2;
  const double h = cfg.pa_height_m;

  const double own_d2 = g_axis(x, cfg);
  const double cross_d2 = dx * dx + h * h + dy * dy;
  const double rx_own = link.eta / own_d2 * (0.5 * power_w);
  const double rx_cross = link.eta / cross_d2 * (0.5 * power_w);
  return rx_own / (rx_cross + noise);
}

double noma_trial(const SystemConfig& cfg, const Link& link, Ue user, double power_w,
                  TrialStream& rng) {
  const auto p = sample_noma(cfg, rng);
  if (user == Ue::first) {
    const double d2 = g_axis(p.x_near, cfg);
    return link.eta * cfg.noma_alpha_near * power_w / (d2 * link.noise_ue1);
  }
  const double dx = p.x_far - 0.5 * cfg.region_x_m;
  const double dy = p.y_far - p.y_near;
  const double h = cfg.pa_height_m;
  const double rx = link.eta / (dx * dx + dy * dy + h * h) * power_w;
  return rx * cfg.noma_alpha_far / (rx * cfg.noma_alpha_near + link.noise_ue2);
}

Link make_link(const SystemConfig& cfg) {
  const auto k = derive_constants(cfg);
  return Link{k.eta_m2, k.noise_w_ue1, k.noise_w_ue2};
}

void check_inputs(const McSpec& spec, double power_w) {
  if (spec.trials == 0) throw std::invalid_argument("trials: must be >= 1");
  if (!(power_w > 0.0) || !std::isfinite(power_w)) {
    throw std::invalid_argument("power_w must be finite and > 0");
  }
}

// Running mean / M2 for one block, merged across blocks in index order.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.n == 0) return;
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(other.n);
    const double delta = other.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += other.m2 + delta * delta * na * nb / total;
    n += other.n;
  }
};

template <class Accum, class PerTrial>
std::vector<Accum> run_blocks(const McSpec& spec, PerTrial&& per_trial) {
  const std::uint64_t blocks = (spec.trials + kMcBlockTrials - 1) / kMcBlockTrials;
  std::vector<Accum> partial(blocks);
  detail::parallel_for(blocks, spec.workers, [&](std::uint64_t b) {
    const std::uint64_t begin = b * kMcBlockTrials;
    const std::uint64_t end = std::min(spec.trials, begin + kMcBlockTrials);
    Accum acc{};
    for (std::uint64_t i = begin; i < end; ++i) {
      TrialStream rng(spec.seed, i);
      per_trial(acc, rng);
    }
    partial[b] = acc;
  });
  return partial;
}

double trial_sinr(const SystemConfig& cfg, const Link& link, Scheme scheme, Ue user,
                  double power_w, TrialStream& rng) {
  return scheme == Scheme::wdma ? wdma_trial(cfg, link, user, power_w, rng)
                                : noma_trial(cfg, link, user, power_w, rng);
}

}  // namespace

double mc_trial_sinr(const SystemConfig& cfg, Scheme scheme, Ue user, double power_w,
                     std::uint64_t seed, std::uint64_t trial) {
  const auto link = make_link(cfg);
  TrialStream rng(seed, trial);
  return trial_sinr(cfg, link, scheme, user, power_w, rng);
}

MetricEstimate mc_outage(const McSpec& spec, const SystemConfig& cfg, double power_w) {
  check_inputs(spec, power_w);
  const auto link = make_link(cfg);
  const double threshold = cfg.outage_threshold;

  const auto counts = run_blocks<std::uint64_t>(
      spec, [&](std::uint64_t& hits, TrialStream& rng) {
        if (trial_sinr(cfg, link, spec.scheme, spec.user, power_w, rng) <= threshold) ++hits;
      });
  std::uint64_t hits = 0;
  for (auto c : counts) hits += c;

  const double t = static_cast<double>(spec.trials);
  const double p = static_cast<double>(hits) / t;
  return MetricEstimate{p, std::sqrt(p * (1.0 - p) / t), spec.trials, Provenance::monte_carlo};
}

MetricEstimate mc_rate(const McSpec& spec, const SystemConfig& cfg, double power_w) {
  check_inputs(spec, power_w);
  const auto link = make_link(cfg);

  const auto partial = run_blocks<Moments>(spec, [&](Moments& acc, TrialStream& rng) {
    const double sinr = trial_sinr(cfg, link, spec.scheme, spec.user, power_w, rng);
    acc.add(std::log1p(sinr) / std::numbers::ln2);
  });
  Moments total;
  for (const auto& m : partial) total.merge(m);

  double se = 0.0;
  if (total.n > 1) {
    const double var = total.m2 / static_cast<double>(total.n - 1);
    se = std::sqrt(std::max(0.0, var) / static_cast<double>(total.n));
  }
  return MetricEstimate{total.mean, se, spec.trials, Provenance::monte_carlo};
}

}  // namespace pasim
