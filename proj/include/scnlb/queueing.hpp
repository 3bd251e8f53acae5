#pragma once

#include <vector>

#include "scnlb/association.hpp"
#include "scnlb/problem.hpp"

namespace scnlb::queueing {

/// Per-station utilizations derived from an association: `bs_load` is the
/// processor-sharing radio queue, `backhaul_load` the M/M/1 backhaul link.
struct LoadState {
  std::vector<double> bs_load;        // rho
  std::vector<double> backhaul_load;  // rho_tilde

  /// All loads within [0, 1-epsilon].
  bool feasible(double epsilon) const;
  /// Any load at or past 1 (queue formulas undefined).
  bool saturated() const;
  /// Station with the largest load (radio or backhaul), -1 when empty.
  int worst_bs() const;
};

/// Radio loads: rho_j = sum_x demand(x) * eta_j(x) / r_j(x), the demand
/// already carrying the quadrature cell area. Throws InfeasibleError when a
/// point puts weight on a station whose rate there is zero.
std::vector<double> bs_load(const Association& assoc, const Problem& problem);
std::vector<double> bs_load(const Association& assoc, const Scenario& scenario);

/// Backhaul loads: only cache misses cross the link, so
/// rho~_j = (1 - alpha_j) * sum_x demand(x) * eta_j(x) / R_j.
std::vector<double> backhaul_load(const Association& assoc, const Problem& problem);
std::vector<double> backhaul_load(const Association& assoc, const Scenario& scenario);

LoadState loads(const Association& assoc, const Problem& problem);

/// load / (1 - load): waiting time per unit of required service time.
/// Throws SaturationError at load >= 1, std::domain_error below 0.
double latency_ratio(double load);

struct DelayBreakdown {
  double bs_delivery_s = 0.0;   // nu / (r * (1 - rho))
  double bs_wait_s = 0.0;       // rho * nu / (r * (1 - rho))
  double backhaul_wait_s = 0.0; // rho~ * nu / (R * (1 - rho~))
};

/// Diagnostic per-user delay at a location served by `bs`. The packet size
/// is taken from the traffic point nearest to `loc`.
DelayBreakdown per_user_delay(Location loc, int bs, const LoadState& state,
                              const Scenario& scenario);

}  // namespace scnlb::queueing
