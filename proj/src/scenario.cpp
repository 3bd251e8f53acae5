#include "scnlb/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "scnlb/errors.hpp"

namespace scnlb {

namespace {

constexpr double kNearFieldClampM = 1.0;

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

}  // namespace

double distance_m(Location a, Location b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool Rect::contains(Location p) const {
  return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
}

std::string to_string(BsKind kind) { return kind == BsKind::Macro ? "macro" : "small"; }

BsKind bs_kind_from_string(const std::string& s) {
  if (s == "macro") return BsKind::Macro;
  if (s == "small") return BsKind::Small;
  throw ConfigError("unknown base station kind: '" + s + "'");
}

double path_loss_db(BsKind kind, double distance_m) {
  if (!(distance_m > 0.0)) throw std::domain_error("path_loss: distance must be positive");
  if (kind == BsKind::Macro) return 128.1 + 37.6 * std::log10(distance_m / 1000.0);
  return 38.0 + 10.0 * std::log10(distance_m);
}

double received_power_dbm(const BaseStation& bs, Location loc, const RadioParams& radio) {
  double d = std::max(distance_m(bs.position, loc), kNearFieldClampM);
  return bs.tx_power_dbm + bs.antenna_gain_db - path_loss_db(bs.kind, d) -
         radio.shadowing_margin_db - radio.fading_margin_db;
}

double sinr(Location loc, int bs_index, const Scenario& scenario) {
  if (bs_index < 0 || bs_index >= scenario.num_bs())
    throw std::out_of_range("sinr: base station index out of range");
  double signal = dbm_to_mw(received_power_dbm(scenario.base_stations[bs_index], loc, scenario.radio));
  double interference = 0.0;
  for (int k = 0; k < scenario.num_bs(); ++k) {
    if (k == bs_index) continue;
    interference += dbm_to_mw(received_power_dbm(scenario.base_stations[k], loc, scenario.radio));
  }
  double noise = dbm_to_mw(scenario.radio.noise_power_dbm);
  return signal / (noise + interference);
}

double rate_bps(Location loc, int bs_index, const Scenario& scenario) {
  if (bs_index < 0 || bs_index >= scenario.num_bs())
    throw std::out_of_range("rate: base station index out of range");
  double rx = received_power_dbm(scenario.base_stations[bs_index], loc, scenario.radio);
  if (rx <= scenario.radio.receiver_sensitivity_dbm) return 0.0;
  return scenario.radio.bandwidth_hz * std::log2(1.0 + sinr(loc, bs_index, scenario));
}

void Scenario::validate() const {
  if (base_stations.empty()) throw ConfigError("scenario has no base stations");
  if (traffic.empty()) throw ConfigError("scenario has no traffic points");
  if (!(area.x_max > area.x_min) || !(area.y_max > area.y_min))
    throw ConfigError("scenario area is empty");
  if (!(radio.bandwidth_hz > 0.0)) throw ConfigError("bandwidth must be positive");
  if (!(algorithm.kappa >= 0.0)) throw ConfigError("kappa must be non-negative");
  if (!(algorithm.epsilon > 0.0 && algorithm.epsilon < 0.5))
    throw ConfigError("epsilon must lie in (0, 0.5)");

  std::set<int> ids;
  for (const auto& bs : base_stations) {
    if (!ids.insert(bs.id).second)
      throw ConfigError("duplicate base station id " + std::to_string(bs.id));
    if (!(bs.cache_hit_ratio >= 0.0 && bs.cache_hit_ratio <= 1.0))
      throw ConfigError("cache hit ratio of BS " + std::to_string(bs.id) + " outside [0,1]");
    if (!(bs.static_power_w > 0.0))
      throw ConfigError("static power of BS " + std::to_string(bs.id) + " must be positive");
    if (!(bs.load_power_coeff_w > 0.0))
      throw ConfigError("load-power coefficient of BS " + std::to_string(bs.id) + " must be positive");
    if (!(bs.backhaul_rate_bps > 0.0))
      throw ConfigError("backhaul rate of BS " + std::to_string(bs.id) + " must be positive");
    if (!(bs.green_supply_w >= 0.0))
      throw ConfigError("green supply of BS " + std::to_string(bs.id) + " must be non-negative");
    if (!area.contains(bs.position))
      throw ConfigError("BS " + std::to_string(bs.id) + " lies outside the area");
  }

  if (grid_nx <= 0 || grid_ny <= 0 ||
      static_cast<size_t>(grid_nx) * static_cast<size_t>(grid_ny) != traffic.size())
    throw ConfigError("traffic grid dimensions do not match the point count");

  std::set<std::pair<double, double>> seen;
  for (size_t i = 0; i < traffic.size(); ++i) {
    const auto& tp = traffic[i];
    if (!(tp.arrival_rate >= 0.0))
      throw ConfigError("traffic point " + std::to_string(i) + " has negative arrival rate");
    if (!(tp.mean_size_bits > 0.0))
      throw ConfigError("traffic point " + std::to_string(i) + " has non-positive mean size");
    if (!(tp.cell_area_m2 > 0.0))
      throw ConfigError("traffic point " + std::to_string(i) + " has non-positive cell area");
    if (!area.contains(tp.location))
      throw ConfigError("traffic point " + std::to_string(i) + " lies outside the area");
    if (!seen.insert({tp.location.x, tp.location.y}).second)
      throw ConfigError("traffic points " + std::to_string(i) + " share a location");
  }
}

}  // namespace scnlb
