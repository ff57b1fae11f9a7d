#pragma once

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hyperalloc/scenario.hpp"

namespace hyperalloc {

/// SimConfig from a JSON object whose keys are the field names. Missing keys
/// keep their defaults; unknown keys are an error.
inline SimConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
  SimConfig c;
  std::set<std::string> seen;
  auto read = [&](const char* key, auto& field) {
    if (auto it = doc.find(key); it != doc.end()) {
      try {
        it->get_to(field);
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: bad value for '") + key + "': " + e.what());
      }
      seen.insert(key);
    }
  };
  read("n_cellular", c.n_cellular);
  read("n_d2d_pairs", c.n_d2d_pairs);
  read("n_channels", c.n_channels);
  read("cell_radius", c.cell_radius);
  read("max_d2d_distance", c.max_d2d_distance);
  read("p_cellular_dbm", c.p_cellular_dbm);
  read("p_d2d_dbm", c.p_d2d_dbm);
  read("delta_c_db", c.delta_c_db);
  read("delta_d_db", c.delta_d_db);
  read("eta_c_db", c.eta_c_db);
  read("eta_d_db", c.eta_d_db);
  read("q_cumulative", c.q_cumulative);
  read("carrier_ghz", c.carrier_ghz);
  read("total_bandwidth_hz", c.total_bandwidth_hz);
  read("noise_figure_db", c.noise_figure_db);
  read("n_trials", c.n_trials);
  read("master_seed", c.master_seed);

  std::string choice, rule;
  read("color_choice", choice);
  read("hyperedge_rule", rule);
  if (seen.count("color_choice")) {
    if (choice == "random") c.color_choice = ColorChoice::kRandom;
    else if (choice == "lowest") c.color_choice = ColorChoice::kLowest;
    else throw std::invalid_argument("config: color_choice must be 'random' or 'lowest'");
  }
  if (seen.count("hyperedge_rule")) {
    if (rule == "weak") c.hyperedge_rule = HyperedgeRule::kWeak;
    else if (rule == "strict") c.hyperedge_rule = HyperedgeRule::kStrict;
    else throw std::invalid_argument("config: hyperedge_rule must be 'weak' or 'strict'");
  }

  for (const auto& [key, value] : doc.items()) {
    if (!seen.count(key)) throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

inline nlohmann::json config_to_json(const SimConfig& c) {
  return {
      {"n_cellular", c.n_cellular},
      {"n_d2d_pairs", c.n_d2d_pairs},
      {"n_channels", c.n_channels},
      {"cell_radius", c.cell_radius},
      {"max_d2d_distance", c.max_d2d_distance},
      {"p_cellular_dbm", c.p_cellular_dbm},
      {"p_d2d_dbm", c.p_d2d_dbm},
      {"delta_c_db", c.delta_c_db},
      {"delta_d_db", c.delta_d_db},
      {"eta_c_db", c.eta_c_db},
      {"eta_d_db", c.eta_d_db},
      {"q_cumulative", c.q_cumulative},
      {"carrier_ghz", c.carrier_ghz},
      {"total_bandwidth_hz", c.total_bandwidth_hz},
      {"noise_figure_db", c.noise_figure_db},
      {"n_trials", c.n_trials},
      {"master_seed", c.master_seed},
      {"color_choice", c.color_choice == ColorChoice::kRandom ? "random" : "lowest"},
      {"hyperedge_rule", c.hyperedge_rule == HyperedgeRule::kWeak ? "weak" : "strict"},
  };
}

inline SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config: '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(doc);
}

}  // namespace hyperalloc
