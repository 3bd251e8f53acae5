#pragma once

#include <span>
#include <vector>

#include "scnlb/nua.hpp"

namespace scnlb::baselines {

/// Per-tier data-rate bias. Macro stays at 1 by convention; only the small
/// tier is swept.
struct BiasConfig {
  double macro = 1.0;
  double small = 1.0;
};

/// Each point picks argmax_j bias(tier_j) * r_j; ties go to the lowest index.
Association drb_associate(const Problem& problem, const BiasConfig& bias);

struct SweepPoint {
  double bias = 0.0;
  double psi = 0.0;
  double latency_index = 0.0;
  double brown_power_w = 0.0;
  bool feasible = false;
};

struct DrbSweepResult {
  double best_bias = 0.0;
  double best_psi = 0.0;
  Association best_association;
  std::vector<SweepPoint> curve;
};

/// 60 log-spaced biases in [0.5, 16].
std::vector<double> default_bias_grid();

/// Evaluates the objective for every bias in the grid and returns the
/// minimizer plus the full curve. Throws ConfigError when the grid is empty
/// or no bias yields a feasible association.
DrbSweepResult drb_sweep(const Problem& problem, std::span<const double> bias_grid);

/// Cache-unaware variant: optimizes with every cache_hit_ratio forced to
/// zero, then reports loads, energy and psi evaluated against the true
/// scenario. The scheme mis-plans; the network still has its caches.
nua::RunResult nua_nc_run(const Scenario& scenario, const nua::RunOptions& opts = {});

}  // namespace scnlb::baselines
