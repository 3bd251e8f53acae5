#include "scnlb/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "scnlb/errors.hpp"
#include "scnlb/report.hpp"

namespace scnlb::baselines {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Association drb_associate(const Problem& pb, const BiasConfig& bias) {
  if (!(bias.macro > 0.0 && bias.small > 0.0))
    throw std::domain_error("drb_associate: biases must be positive");
  std::vector<int> choice(pb.num_points);
  for (int p = 0; p < pb.num_points; ++p) {
    double best = 0.0;
    int best_b = -1;
    for (int b = 0; b < pb.num_bs; ++b) {
      double r = pb.rate(p, b);
      if (!(r > 0.0)) continue;
      double tier = pb.scenario.base_stations[b].kind == BsKind::Macro ? bias.macro : bias.small;
      double biased = tier * r;
      if (biased > best) {
        best = biased;
        best_b = b;
      }
    }
    if (best_b < 0)
      throw UncoveredError(p, "no station serves traffic point " + std::to_string(p));
    choice[p] = best_b;
  }
  return Association::one_hot(choice, pb.num_bs);
}

std::vector<double> default_bias_grid() {
  const int n = 60;
  const double lo = 0.5, hi = 16.0;
  std::vector<double> grid(n);
  double log_lo = std::log(lo), log_hi = std::log(hi);
  for (int i = 0; i < n; ++i)
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (n - 1));
  return grid;
}

DrbSweepResult drb_sweep(const Problem& pb, std::span<const double> bias_grid) {
  if (bias_grid.empty()) throw ConfigError("drb_sweep: empty bias grid");
  const double eps = pb.scenario.algorithm.epsilon;

  DrbSweepResult result;
  result.best_psi = kInf;
  for (double bias : bias_grid) {
    Association assoc = drb_associate(pb, BiasConfig{.macro = 1.0, .small = bias});
    auto loads = queueing::loads(assoc, pb);
    SweepPoint pt;
    pt.bias = bias;
    pt.feasible = loads.feasible(eps);
    if (loads.saturated()) {
      pt.psi = kInf;
      pt.latency_index = kInf;
      pt.brown_power_w = kInf;
    } else {
      auto metrics = report::compute_metrics(assoc, pb);
      pt.psi = metrics.psi;
      pt.latency_index = metrics.latency_index;
      pt.brown_power_w = metrics.brown_power_total_w;
    }
    if (pt.feasible && pt.psi < result.best_psi) {
      result.best_psi = pt.psi;
      result.best_bias = bias;
      result.best_association = assoc;
    }
    result.curve.push_back(pt);
  }
  if (!(result.best_psi < kInf))
    throw ConfigError("drb_sweep: every bias in the grid saturates the network");
  return result;
}

nua::RunResult nua_nc_run(const Scenario& scenario, const nua::RunOptions& opts) {
  Scenario internal = scenario;
  for (auto& bs : internal.base_stations) bs.cache_hit_ratio = 0.0;

  nua::RunResult result = nua::run(Problem::from_scenario(internal), opts);

  // The scheme planned without caches; the achieved performance is what the
  // real network (with its caches) delivers under that association.
  Problem truth = Problem::from_scenario(scenario);
  result.loads = queueing::loads(result.association, truth);
  result.energy = energy::compute(result.loads, truth);
  result.psi = nua::objective(result.association, truth);
  if (result.status != nua::RunStatus::Infeasible &&
      !result.loads.feasible(scenario.algorithm.epsilon)) {
    result.status = nua::RunStatus::Infeasible;
    result.trace.status = nua::RunStatus::Infeasible;
    result.trace.witness_bs = result.loads.worst_bs();
  }
  return result;
}

}  // namespace scnlb::baselines
