#pragma once

#include <vector>

#include "scnlb/problem.hpp"
#include "scnlb/queueing.hpp"

namespace scnlb::energy {

struct EnergyState {
  std::vector<double> power_w;
  std::vector<double> brown_power_w;
  std::vector<double> green_capacity;
  std::vector<double> latency_weight;

  double total_brown_w() const;
};

/// Affine power model: static draw plus load_power_coeff * load.
double bs_power_w(double load, const BaseStation& bs);

/// Grid draw once the green budget is exhausted: max(power - green, 0).
double brown_power_w(double power_w, double green_supply_w);

/// Largest load whose power draw fits the green supply, clamped to
/// [0, 1-epsilon].
double green_capacity(const BaseStation& bs, double epsilon);

/// exp(kappa * (load - green_cap)): > 1 exactly when the station would burn
/// grid power, < 1 when it has green headroom.
double latency_weight(double load, double green_cap, double kappa);

EnergyState compute(const queueing::LoadState& loads, const Problem& problem);

}  // namespace scnlb::energy
