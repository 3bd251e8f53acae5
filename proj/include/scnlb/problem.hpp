#pragma once

#include <vector>

#include "scnlb/scenario.hpp"

namespace scnlb {

/// A scenario prepared for optimization: the point-by-station rate table,
/// per-point offered demand and per-station green traffic capacities are
/// computed once so the iteration never touches the radio model again.
struct Problem {
  Scenario scenario;
  std::vector<double> rates;      // [point * num_bs + bs], bits/s
  std::vector<double> demand;     // per point, bits/s (lambda * nu * area)
  std::vector<double> green_cap;  // per station, dimensionless
  int num_points = 0;
  int num_bs = 0;

  double rate(int point, int bs) const { return rates[static_cast<size_t>(point) * num_bs + bs]; }

  static Problem from_scenario(const Scenario& scenario);

  /// Build with an explicit rate table, bypassing the radio model. Meant for
  /// synthetic setups where rates are dictated directly.
  static Problem from_rates(Scenario scenario, std::vector<double> rates);
};

}  // namespace scnlb
