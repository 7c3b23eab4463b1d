#include "pasim/config.hpp"

#include <cmath>
#include <numbers>

namespace pasim {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ConfigError(std::string(field) + ": " + what);
}

}  // namespace

void validate(const SystemConfig& cfg) {
  require(std::isfinite(cfg.carrier_freq_hz) && cfg.carrier_freq_hz > 0.0,
          "carrier_freq_hz", "must be finite and > 0");
  require(std::isfinite(cfg.pa_height_m) && cfg.pa_height_m > 0.0,
          "pa_height_m", "must be finite and > 0");
  require(std::isfinite(cfg.region_x_m) && cfg.region_x_m > 0.0,
          "region_x_m", "must be finite and > 0");
  require(std::isfinite(cfg.region_y_m) && cfg.region_y_m > 0.0,
          "region_y_m", "must be finite and > 0");
  require(std::isfinite(cfg.region_y_offset_m) && cfg.region_y_offset_m >= 0.0,
          "region_y_offset_m", "must be finite and >= 0");
  require(std::isfinite(cfg.noise_power_dbm_ue1), "noise_power_dbm_ue1", "must be finite");
  require(std::isfinite(cfg.noise_power_dbm_ue2), "noise_power_dbm_ue2", "must be finite");
  require(std::isfinite(cfg.outage_threshold) && cfg.outage_threshold > 0.0,
          "outage_threshold", "must be finite and > 0");
  require(std::isfinite(cfg.noma_alpha_near) && cfg.noma_alpha_near > 0.0,
          "noma_alpha_near", "must be finite and > 0");
  require(std::isfinite(cfg.noma_alpha_far) && cfg.noma_alpha_far > 0.0,
          "noma_alpha_far", "must be finite and > 0");
  require(std::abs(cfg.noma_alpha_near + cfg.noma_alpha_far - 1.0) <= 1e-12,
          "noma_alpha_near", "noma_alpha_near + noma_alpha_far must equal 1");
  require(cfg.noma_alpha_near < cfg.noma_alpha_far,
          "noma_alpha_near", "must be smaller than noma_alpha_far");
}

double path_loss_factor(double carrier_freq_hz) {
  const double pi = std::numbers::pi;
  return (kSpeedOfLight * kSpeedOfLight) / (16.0 * pi * pi * carrier_freq_hz * carrier_freq_hz);
}

DerivedConstants derive_constants(const SystemConfig& cfg) {
  validate(cfg);
  DerivedConstants out;
  out.eta_m2 = path_loss_factor(cfg.carrier_freq_hz);
  out.noise_w_ue1 = dbm_to_watt(cfg.noise_power_dbm_ue1);
  out.noise_w_ue2 = dbm_to_watt(cfg.noise_power_dbm_ue2);
  return out;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

double snr_db_to_power_w(double snr_db, double noise_w) {
  return db_to_linear(snr_db) * noise_w;
}

double power_w_to_snr_db(double power_w, double noise_w) {
  return linear_to_db(power_w / noise_w);
}

}  // namespace pasim
