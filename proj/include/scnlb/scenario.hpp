#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scnlb {

struct Location {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

double distance_m(Location a, Location b);

struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  bool contains(Location p) const;
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
};

enum class BsKind { Macro, Small };

std::string to_string(BsKind kind);
BsKind bs_kind_from_string(const std::string& s);

/// One base station: radio, backhaul, cache and energy parameters.
struct BaseStation {
  int id = 0;
  BsKind kind = BsKind::Small;
  Location position;
  double tx_power_dbm = 33.0;
  double static_power_w = 37.0;      // draw at zero traffic load
  double load_power_coeff_w = 4.0;   // extra watts per unit of traffic load
  double green_supply_w = 0.0;       // renewable budget for one balancing round
  double panel_area_m2 = 0.0;        // used by solar-efficiency sweeps
  double backhaul_rate_bps = 5e6;
  double cache_hit_ratio = 0.0;      // fraction of requests served locally, in [0,1]
  double antenna_gain_db = 15.0;
};

/// One cell of the discretized demand field. `arrival_rate` is an areal
/// density (arrivals per second per square meter); the load integrals weight
/// each point by `cell_area_m2`.
struct TrafficPoint {
  Location location;
  double arrival_rate = 0.0;
  double mean_size_bits = 1e6;
  double cell_area_m2 = 1.0;

  /// Offered traffic of this cell in bits/s.
  double demand_bps() const { return arrival_rate * mean_size_bits * cell_area_m2; }
};

struct RadioParams {
  double bandwidth_hz = 10e6;
  double noise_power_dbm = -174.0;
  double receiver_sensitivity_dbm = -123.0;
  double shadowing_margin_db = 5.0;
  double fading_margin_db = 9.0;
};

struct AlgorithmParams {
  double kappa = 0.0;    // energy-latency tradeoff weight, >= 0
  double epsilon = 1e-3; // load cap: queues must stay <= 1 - epsilon
  std::uint64_t rng_seed = 0;
};

/// Immutable network description. Construct (or load), validate once, then
/// share freely: nothing here mutates during a balancing run.
struct Scenario {
  Rect area;
  RadioParams radio;
  AlgorithmParams algorithm;
  std::vector<BaseStation> base_stations;
  std::vector<TrafficPoint> traffic;
  // Traffic grid shape; points are stored row-major (iy * grid_nx + ix).
  // Hand-built point lists use grid_nx = size, grid_ny = 1.
  int grid_nx = 0;
  int grid_ny = 0;

  int num_bs() const { return static_cast<int>(base_stations.size()); }
  int num_points() const { return static_cast<int>(traffic.size()); }

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

// --- Radio model -----------------------------------------------------------
//
// Path-loss distance convention: macro stations use the distance in
// kilometers, small cells the distance in meters. Both formulas grow
// strictly with distance.

double path_loss_db(BsKind kind, double distance_m);

/// Received power at `loc` from `bs`, after antenna gain and the fixed
/// shadowing/fading margins. Distances below 1 m are clamped (near field).
double received_power_dbm(const BaseStation& bs, Location loc, const RadioParams& radio);

/// Linear SINR of `bs_index` at `loc`; every other station interferes.
double sinr(Location loc, int bs_index, const Scenario& scenario);

/// Shannon rate in bits/s (bandwidth * log2(1+SINR)); zero when the received
/// power is at or below the receiver sensitivity.
double rate_bps(Location loc, int bs_index, const Scenario& scenario);

}  // namespace scnlb
