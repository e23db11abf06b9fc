#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dudelab/errors.hpp"
#include "dudelab/params.hpp"
#include "dudelab/units.hpp"
#include "json.hpp"

namespace dudelab {

// A sweep request: transform one named parameter over a grid and evaluate the
// requested scenarios at every grid point.
struct SweepConfig {
  std::string key;  // q_ratio_db | lambda_ratio | q_m_dbm | q_s_dbm
  std::vector<double> grid;
  std::vector<std::string> scenarios;  // subset of coupled | decoupled | decoupled_pa
};

struct Config {
  SystemParams system;
  SimulationParams sim;
  bool has_sim = false;
  std::optional<SweepConfig> sweep;
};

namespace detail {

inline double config_number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
  return v.get<double>();
}

inline std::uint64_t config_unsigned(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_unsigned()) throw ConfigError("key '" + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

inline void reject_unknown_keys(const nlohmann::json& obj, const char* scope,
                                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || item.key() == a;
    if (!known) throw ConfigError(std::string("unknown key '") + item.key() + "' in " + scope);
  }
}

}  // namespace detail

// Parses a JSON configuration. Every key is optional (defaults are the
// built-in parameter set); unknown keys are rejected rather than ignored so a
// typo cannot silently fall back to a default. Powers are given in dBm and
// converted to watts here; noise_dbm additionally accepts the string "-inf"
// for the no-noise regime.
inline Config parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("top level must be a JSON object");
  detail::reject_unknown_keys(j, "config",
                              {"lambda_m_per_km2", "lambda_s_per_km2", "p_m_dbm", "p_s_dbm",
                               "q_m_dbm", "q_s_dbm", "alpha", "noise_dbm", "bandwidth_hz", "rho",
                               "p_c_watt", "sim", "sweep"});

  Config cfg;
  SystemParams& p = cfg.system;
  const auto number = [&](const char* key, double& out) {
    if (j.contains(key)) out = detail::config_number(j.at(key), key);
  };
  const auto dbm = [&](const char* key, double& out) {
    if (j.contains(key)) out = dbm_to_watt(detail::config_number(j.at(key), key));
  };
  number("lambda_m_per_km2", p.lambda_m);
  number("lambda_s_per_km2", p.lambda_s);
  dbm("p_m_dbm", p.p_m);
  dbm("p_s_dbm", p.p_s);
  dbm("q_m_dbm", p.q_m);
  dbm("q_s_dbm", p.q_s);
  number("alpha", p.alpha);
  number("bandwidth_hz", p.bandwidth);
  number("rho", p.rho);
  number("p_c_watt", p.p_c);
  if (j.contains("noise_dbm")) {
    const nlohmann::json& v = j.at("noise_dbm");
    if (v.is_string()) {
      if (v.get<std::string>() != "-inf")
        throw ConfigError("noise_dbm must be a number or the string \"-inf\"");
      p.noise = 0.0;
    } else {
      p.noise = dbm_to_watt(detail::config_number(v, "noise_dbm"));
    }
  }

  if (j.contains("sim")) {
    const nlohmann::json& s = j.at("sim");
    if (!s.is_object()) throw ConfigError("'sim' must be an object");
    detail::reject_unknown_keys(
        s, "sim", {"drops", "window_radius_km", "seed", "interferer_density_per_km2"});
    cfg.has_sim = true;
    if (s.contains("drops")) cfg.sim.drops = detail::config_unsigned(s.at("drops"), "drops");
    if (s.contains("seed")) cfg.sim.seed = detail::config_unsigned(s.at("seed"), "seed");
    if (s.contains("window_radius_km"))
      cfg.sim.window_radius = detail::config_number(s.at("window_radius_km"), "window_radius_km");
    if (s.contains("interferer_density_per_km2"))
      cfg.sim.interferer_density =
          detail::config_number(s.at("interferer_density_per_km2"), "interferer_density_per_km2");
  }

  if (j.contains("sweep")) {
    const nlohmann::json& s = j.at("sweep");
    if (!s.is_object()) throw ConfigError("'sweep' must be an object");
    detail::reject_unknown_keys(s, "sweep", {"key", "grid", "scenarios"});
    SweepConfig sw;
    if (!s.contains("key") || !s.at("key").is_string())
      throw ConfigError("sweep needs a string 'key'");
    sw.key = s.at("key").get<std::string>();
    if (sw.key != "q_ratio_db" && sw.key != "lambda_ratio" && sw.key != "q_m_dbm" &&
        sw.key != "q_s_dbm")
      throw ConfigError("unknown sweep key '" + sw.key + "'");
    if (!s.contains("grid") || !s.at("grid").is_array() || s.at("grid").empty())
      throw ConfigError("sweep needs a non-empty 'grid' array");
    for (const auto& v : s.at("grid")) sw.grid.push_back(detail::config_number(v, "grid"));
    for (std::size_t i = 1; i < sw.grid.size(); ++i)
      if (!(sw.grid[i] > sw.grid[i - 1]))
        throw ConfigError("sweep grid must be strictly increasing");
    if (s.contains("scenarios")) {
      if (!s.at("scenarios").is_array() || s.at("scenarios").empty())
        throw ConfigError("'scenarios' must be a non-empty array");
      for (const auto& v : s.at("scenarios")) {
        if (!v.is_string()) throw ConfigError("scenario names must be strings");
        const std::string name = v.get<std::string>();
        if (name != "coupled" && name != "decoupled" && name != "decoupled_pa")
          throw ConfigError("unknown scenario '" + name + "'");
        for (const std::string& seen : sw.scenarios)
          if (seen == name) throw ConfigError("duplicate scenario '" + name + "'");
        sw.scenarios.push_back(name);
      }
    } else {
      sw.scenarios = {"decoupled_pa"};
    }
    cfg.sweep = std::move(sw);
  }
  return cfg;
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace dudelab
