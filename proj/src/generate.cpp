#include "scnlb/generate.hpp"

#include <array>
#include <cmath>
#include <string>

#include "scnlb/errors.hpp"
#include "scnlb/rng.hpp"

namespace scnlb {

namespace {

// Average cache hit ratios for the reference 3-macro / 7-small layout, in
// station id order.
constexpr std::array<double, 10> kReferenceHitRatios = {0.27, 0.12, 0.28, 0.12, 0.17,
                                                        0.22, 0.22, 0.24, 0.24, 0.19};

constexpr double kSolarRateWPerM2 = 174.0;  // 17.4% efficiency at 1000 W/m^2

}  // namespace

Scenario generate_scenario(std::uint64_t seed, const GenerateParams& params) {
  if (params.macro_count < 0 || params.small_count < 0 ||
      params.macro_count + params.small_count < 1)
    throw ConfigError("generate_scenario: need at least one base station");
  if (params.grid < 1) throw ConfigError("generate_scenario: grid must be at least 1");
  if (!(params.area_size_m > 0.0)) throw ConfigError("generate_scenario: empty area");
  if (!(params.lambda_min >= 0.0) || params.lambda_max < params.lambda_min)
    throw ConfigError("generate_scenario: bad traffic intensity range");

  std::mt19937_64 gen(seed);
  Scenario sc;
  sc.area = {0.0, 0.0, params.area_size_m, params.area_size_m};
  sc.algorithm.kappa = params.kappa;
  sc.algorithm.epsilon = params.epsilon;
  sc.algorithm.rng_seed = seed;

  int total = params.macro_count + params.small_count;
  bool reference_layout = params.macro_count == 3 && params.small_count == 7;
  for (int i = 0; i < total; ++i) {
    BaseStation bs;
    bs.id = i + 1;
    bs.kind = i < params.macro_count ? BsKind::Macro : BsKind::Small;
    bs.position = {rng_uniform(gen, 0.0, params.area_size_m),
                   rng_uniform(gen, 0.0, params.area_size_m)};
    if (bs.kind == BsKind::Macro) {
      bs.tx_power_dbm = 43.0;
      bs.static_power_w = 750.0;
      bs.load_power_coeff_w = 500.0;
      bs.backhaul_rate_bps = params.macro_backhaul_bps;
      bs.green_supply_w = rng_uniform(gen, 750.0, 1300.0);
    } else {
      bs.tx_power_dbm = 33.0;
      bs.static_power_w = 37.0;
      bs.load_power_coeff_w = 4.0;
      bs.backhaul_rate_bps = params.small_backhaul_bps;
      bs.green_supply_w = rng_uniform(gen, 37.0, 48.0);
    }
    bs.panel_area_m2 = bs.green_supply_w / kSolarRateWPerM2;
    bs.cache_hit_ratio =
        reference_layout ? kReferenceHitRatios[i] : rng_uniform(gen, 0.1, 0.3);
    bs.antenna_gain_db = 15.0;
    sc.base_stations.push_back(bs);
  }

  double cell = params.area_size_m / params.grid;
  sc.grid_nx = params.grid;
  sc.grid_ny = params.grid;
  sc.traffic.reserve(static_cast<size_t>(params.grid) * params.grid);
  for (int iy = 0; iy < params.grid; ++iy) {
    for (int ix = 0; ix < params.grid; ++ix) {
      TrafficPoint tp;
      tp.location = {(ix + 0.5) * cell, (iy + 0.5) * cell};
      tp.arrival_rate = rng_uniform(gen, params.lambda_min, params.lambda_max);
      tp.mean_size_bits = params.mean_size_bits;
      tp.cell_area_m2 = cell * cell;
      sc.traffic.push_back(tp);
    }
  }

  sc.validate();

  for (int p = 0; p < sc.num_points(); ++p) {
    bool covered = false;
    for (int b = 0; b < sc.num_bs() && !covered; ++b)
      covered = rate_bps(sc.traffic[p].location, b, sc) > 0.0;
    if (!covered)
      throw ConfigError("generated scenario leaves traffic point " + std::to_string(p) +
                        " at (" + std::to_string(sc.traffic[p].location.x) + ", " +
                        std::to_string(sc.traffic[p].location.y) + ") uncovered");
  }
  return sc;
}

}  // namespace scnlb
