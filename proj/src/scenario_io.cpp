#include "scnlb/scenario_io.hpp"

#include <fstream>

#include "scnlb/errors.hpp"

namespace scnlb {

using nlohmann::json;

nlohmann::json scenario_to_json(const Scenario& sc) {
  json j;
  j["area"] = {{"x_min", sc.area.x_min},
               {"y_min", sc.area.y_min},
               {"x_max", sc.area.x_max},
               {"y_max", sc.area.y_max}};
  j["radio"] = {{"bandwidth_hz", sc.radio.bandwidth_hz},
                {"noise_power_dbm", sc.radio.noise_power_dbm},
                {"receiver_sensitivity_dbm", sc.radio.receiver_sensitivity_dbm},
                {"shadowing_margin_db", sc.radio.shadowing_margin_db},
                {"fading_margin_db", sc.radio.fading_margin_db}};
  j["algorithm"] = {{"kappa", sc.algorithm.kappa},
                    {"epsilon", sc.algorithm.epsilon},
                    {"rng_seed", sc.algorithm.rng_seed}};
  json stations = json::array();
  for (const auto& bs : sc.base_stations) {
    stations.push_back({{"id", bs.id},
                        {"kind", to_string(bs.kind)},
                        {"x", bs.position.x},
                        {"y", bs.position.y},
                        {"tx_power_dbm", bs.tx_power_dbm},
                        {"static_power_w", bs.static_power_w},
                        {"load_power_coeff_w", bs.load_power_coeff_w},
                        {"green_supply_w", bs.green_supply_w},
                        {"panel_area_m2", bs.panel_area_m2},
                        {"backhaul_rate_bps", bs.backhaul_rate_bps},
                        {"cache_hit_ratio", bs.cache_hit_ratio},
                        {"antenna_gain_db", bs.antenna_gain_db}});
  }
  j["base_stations"] = std::move(stations);
  json points = json::array();
  for (const auto& tp : sc.traffic) {
    points.push_back({{"x", tp.location.x},
                      {"y", tp.location.y},
                      {"arrival_rate", tp.arrival_rate},
                      {"mean_size_bits", tp.mean_size_bits},
                      {"cell_area_m2", tp.cell_area_m2}});
  }
  j["traffic_grid"] = {{"nx", sc.grid_nx}, {"ny", sc.grid_ny}, {"points", std::move(points)}};
  return j;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  try {
    Scenario sc;
    const auto& area = j.at("area");
    sc.area = {area.at("x_min"), area.at("y_min"), area.at("x_max"), area.at("y_max")};
    const auto& radio = j.at("radio");
    sc.radio.bandwidth_hz = radio.at("bandwidth_hz");
    sc.radio.noise_power_dbm = radio.at("noise_power_dbm");
    sc.radio.receiver_sensitivity_dbm = radio.at("receiver_sensitivity_dbm");
    sc.radio.shadowing_margin_db = radio.at("shadowing_margin_db");
    sc.radio.fading_margin_db = radio.at("fading_margin_db");
    const auto& algo = j.at("algorithm");
    sc.algorithm.kappa = algo.at("kappa");
    sc.algorithm.epsilon = algo.at("epsilon");
    sc.algorithm.rng_seed = algo.at("rng_seed");
    for (const auto& s : j.at("base_stations")) {
      BaseStation bs;
      bs.id = s.at("id");
      bs.kind = bs_kind_from_string(s.at("kind"));
      bs.position = {s.at("x"), s.at("y")};
      bs.tx_power_dbm = s.at("tx_power_dbm");
      bs.static_power_w = s.at("static_power_w");
      bs.load_power_coeff_w = s.at("load_power_coeff_w");
      bs.green_supply_w = s.at("green_supply_w");
      bs.panel_area_m2 = s.value("panel_area_m2", bs.green_supply_w / 174.0);
      bs.backhaul_rate_bps = s.at("backhaul_rate_bps");
      bs.cache_hit_ratio = s.at("cache_hit_ratio");
      bs.antenna_gain_db = s.at("antenna_gain_db");
      sc.base_stations.push_back(bs);
    }
    const auto& grid = j.at("traffic_grid");
    sc.grid_nx = grid.at("nx");
    sc.grid_ny = grid.at("ny");
    for (const auto& t : grid.at("points")) {
      TrafficPoint tp;
      tp.location = {t.at("x"), t.at("y")};
      tp.arrival_rate = t.at("arrival_rate");
      tp.mean_size_bits = t.at("mean_size_bits");
      tp.cell_area_m2 = t.at("cell_area_m2");
      sc.traffic.push_back(tp);
    }
    sc.validate();
    return sc;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed scenario file: ") + e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("cannot parse scenario file " + path.string() + ": " + e.what());
  }
  return scenario_from_json(j);
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write scenario file: " + path.string());
  out << scenario_to_json(scenario).dump(2) << '\n';
}

}  // namespace scnlb
