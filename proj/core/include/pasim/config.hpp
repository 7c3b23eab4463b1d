#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pasim {

/// Speed of light in vacuum, m/s (exact).
inline constexpr double kSpeedOfLight = 299'792'458.0;

/// Thrown for any configuration that violates a physical or protocol invariant.
/// The message always starts with the offending field name.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// User index. WDMA indexes users by sub-region/waveguide, NOMA by near/far
/// ordering (first = near, second = far).
enum class Ue { first = 1, second = 2 };

constexpr int index_of(Ue ue) { return static_cast<int>(ue); }

/// Physical, geometric and protocol parameters of a two-user downlink.
///
/// Users live in two sub-regions [0, region_x_m] x [s, s + region_y_m] and
/// [0, region_x_m] x [-s - region_y_m, -s], where s is region_y_offset_m.
/// Defaults are the reference scenario: 28 GHz, h = 3 m, 10 x 20 m regions,
/// -90 dBm noise, threshold 5, NOMA split (0.05, 0.95).
struct SystemConfig {
  double carrier_freq_hz = 28.0e9;
  double pa_height_m = 3.0;
  double region_x_m = 10.0;
  double region_y_m = 20.0;
  double region_y_offset_m = 0.0;
  double noise_power_dbm_ue1 = -90.0;
  double noise_power_dbm_ue2 = -90.0;
  double outage_threshold = 5.0;
  double noma_alpha_near = 0.05;
  double noma_alpha_far = 0.95;

  bool operator==(const SystemConfig&) const = default;
};

/// Throws ConfigError naming the first violated invariant.
void validate(const SystemConfig& cfg);

struct DerivedConstants {
  double eta_m2 = 0.0;  ///< free-space path-loss factor c^2 / (16 pi^2 f_c^2)
  double noise_w_ue1 = 0.0;
  double noise_w_ue2 = 0.0;

  double noise_w(Ue ue) const { return ue == Ue::first ? noise_w_ue1 : noise_w_ue2; }
};

DerivedConstants derive_constants(const SystemConfig& cfg);

double path_loss_factor(double carrier_freq_hz);

double db_to_linear(double db);
double linear_to_db(double ratio);
double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

/// Transmit power for a transmit SNR given relative to `noise_w`.
double snr_db_to_power_w(double snr_db, double noise_w);
double power_w_to_snr_db(double power_w, double noise_w);

// JSON configuration. Field names match SystemConfig exactly; unknown keys and
// non-numeric values are rejected, absent keys keep their defaults.
SystemConfig config_from_json(std::string_view text);
SystemConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const SystemConfig& cfg);

}  // namespace pasim
