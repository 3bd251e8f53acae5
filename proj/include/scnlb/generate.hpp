#pragma once

#include <cstdint>

#include "scnlb/scenario.hpp"

namespace scnlb {

/// Knobs for the reference scenario generator. Defaults reproduce the
/// standard setup: 3 macro + 7 small stations in a 2 km x 2 km area,
/// 43/33 dBm transmit power, 750/37 W static power, load-power
/// coefficients 500/4, 5 Mbps small-cell backhaul and solar supplies at
/// 174 W/m^2.
struct GenerateParams {
  int macro_count = 3;
  int small_count = 7;
  int grid = 50;  // grid x grid traffic points
  double area_size_m = 2000.0;

  // Areal arrival-rate density drawn uniformly per cell (events/s/m^2).
  double lambda_min = 2.4e-6;
  double lambda_max = 4.4e-6;
  double mean_size_bits = 1e6;

  double macro_backhaul_bps = 100e6;
  double small_backhaul_bps = 5e6;

  double kappa = 0.0;
  double epsilon = 1e-3;
};

/// Deterministic in `seed`: station placement, green supplies and traffic
/// intensities all derive from it. Throws ConfigError on bad parameters or
/// when some traffic point ends up with no usable station.
Scenario generate_scenario(std::uint64_t seed, const GenerateParams& params = {});

}  // namespace scnlb
