#pragma once

#include <optional>
#include <vector>

#include "scnlb/association.hpp"
#include "scnlb/energy.hpp"
#include "scnlb/problem.hpp"
#include "scnlb/queueing.hpp"

namespace scnlb::nua {

/// Per-station utility advertisement broadcast each iteration. theta_a is
/// the marginal radio-latency cost (dimensionless), theta_b the marginal
/// backhaul cost (seconds per bit).
struct Advertisement {
  std::vector<double> theta_a;
  std::vector<double> theta_b;
};

enum class RunStatus { Converged, MaxIterations, Infeasible };

std::string to_string(RunStatus status);

struct IterationRecord {
  int iter = 0;
  double psi = 0.0;
  double delta = 0.0;
  double max_eta_change = 0.0;
  std::vector<double> bs_load;
  std::vector<double> backhaul_load;
  // <grad, eta_new - eta_bar_prev>, NaN unless descent checking is on.
  double descent_inner = 0.0;
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  RunStatus status = RunStatus::MaxIterations;
  int iterations = 0;
  int witness_bs = -1;  // saturated station when status == Infeasible
};

struct RunOptions {
  int max_iters = 500;
  double tol = 1e-6;      // relative objective change declaring convergence
  double delta0 = 0.5;
  int max_backtracks = 40;
  bool check_descent = false;
  // Override the max-SINR initial attachment (per-point station indices).
  std::optional<std::vector<int>> initial_choice;
};

struct RunResult {
  Association association;  // one-hot rows
  queueing::LoadState loads;
  energy::EnergyState energy;
  IterationTrace trace;
  double psi = 0.0;  // objective of the final binary association
  RunStatus status = RunStatus::MaxIterations;
  int iterations = 0;
};

/// The balancing objective psi = sum_j w_j * (mu_j + mu~_j). Returns the
/// +infinity sentinel instead of throwing when some queue saturates.
double objective(const Association& assoc, const Problem& problem);
double objective(const Association& assoc, const Scenario& scenario);

/// Exact partial derivative of the (discretized) objective with respect to
/// eta[point][bs]: demand/r * theta_a + demand * theta_b at current loads.
/// Throws SaturationError when the association saturates a queue; +infinity
/// where the rate is zero.
double gradient(const Association& assoc, const Problem& problem, int point, int bs);
double gradient(const Association& assoc, const Scenario& scenario, int point, int bs);

/// Advertisements at the given loads. Loads at or above 1-epsilon are
/// clamped to 1-epsilon so intermediate saturated iterates still advertise
/// finite values.
Advertisement advertise(const queueing::LoadState& loads, const Problem& problem);

/// User-side selection: argmax_j r_j / (theta_a_j + r_j * theta_b_j) over
/// stations with positive rate; ties go to the lowest index. Throws
/// UncoveredError when every rate is zero.
int select_bs(std::span<const double> rates, const Advertisement& ads);

/// Applies select_bs at every traffic point; rows of the result are one-hot.
Association association_step(const Problem& problem, const Advertisement& ads);

/// Exponential averaging: (1-delta) * eta_new + delta * eta_bar_prev.
/// Requires delta in (0,1); preserves row-stochasticity.
Association intermediate_update(const Association& eta_new, const Association& eta_bar_prev,
                                double delta);

/// Backtracking choice of the averaging parameter: delta0 first, then ever
/// smaller steps (delta -> 1) until the blended objective strictly drops.
/// nullopt signals stagnation (treated as converged by run()).
std::optional<double> choose_delta(const Association& eta_new, const Association& eta_bar_prev,
                                   const Problem& problem, const RunOptions& opts = {});

/// The full fixed-point iteration: max-SINR start, then
/// advertise -> select -> average until the relative objective change falls
/// below tol. The returned association is the binary selection under the
/// final advertisements.
RunResult run(const Problem& problem, const RunOptions& opts = {});
RunResult run(const Scenario& scenario, const RunOptions& opts = {});

}  // namespace scnlb::nua
