#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "pasim/config.hpp"

namespace pasim {

namespace {

using Field = std::pair<const char*, double SystemConfig::*>;

constexpr Field kFields[] = {
    {"carrier_freq_hz", &SystemConfig::carrier_freq_hz},
    {"pa_height_m", &SystemConfig::pa_height_m},
    {"region_x_m", &SystemConfig::region_x_m},
    {"region_y_m", &SystemConfig::region_y_m},
    {"region_y_offset_m", &SystemConfig::region_y_offset_m},
    {"noise_power_dbm_ue1", &SystemConfig::noise_power_dbm_ue1},
    {"noise_power_dbm_ue2", &SystemConfig::noise_power_dbm_ue2},
    {"outage_threshold", &SystemConfig::outage_threshold},
    {"noma_alpha_near", &SystemConfig::noma_alpha_near},
    {"noma_alpha_far", &SystemConfig::noma_alpha_far},
};

const Field* find_field(std::string_view key) {
  for (const auto& f : kFields) {
    if (key == f.first) return &f;
  }
  return nullptr;
}

}  // namespace

SystemConfig config_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top-level value must be an object");

  SystemConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    const Field* field = find_field(key);
    if (field == nullptr) throw ConfigError(key + ": unknown configuration key");
    if (!value.is_number()) throw ConfigError(key + ": must be a number");
    cfg.*(field->second) = value.get<double>();
  }
  validate(cfg);
  return cfg;
}

SystemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

std::string config_to_json(const SystemConfig& cfg) {
  nlohmann::ordered_json doc;
  for (const auto& [name, member] : kFields) doc[name] = cfg.*member;
  return doc.dump(2);
}

}  // namespace pasim
