#include "scnlb/nua.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "scnlb/errors.hpp"

namespace scnlb::nua {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Evaluation {
  queueing::LoadState loads;
  double psi = 0.0;
  int witness = -1;  // saturated station when psi is the infinity sentinel
};

double psi_of_loads(const queueing::LoadState& ls, const Problem& pb, int* witness) {
  double kappa = pb.scenario.algorithm.kappa;
  double psi = 0.0;
  for (int b = 0; b < pb.num_bs; ++b) {
    double rho = ls.bs_load[b];
    double rho_t = ls.backhaul_load[b];
    if (rho >= 1.0 || rho_t >= 1.0) {
      if (witness) *witness = b;
      return kInf;
    }
    double w = energy::latency_weight(rho, pb.green_cap[b], kappa);
    psi += w * (queueing::latency_ratio(rho) + queueing::latency_ratio(rho_t));
  }
  return psi;
}

Evaluation evaluate(const Association& assoc, const Problem& pb) {
  Evaluation ev;
  ev.loads = queueing::loads(assoc, pb);
  ev.psi = psi_of_loads(ev.loads, pb, &ev.witness);
  return ev;
}

struct Theta {
  double a = 0.0;
  double b = 0.0;
};

Theta theta_at(double rho, double rho_t, double green_cap, const BaseStation& bs, double kappa) {
  double e = std::exp(kappa * (rho - green_cap));
  double a = e * (kappa * rho / (1.0 - rho) + kappa * rho_t / (1.0 - rho_t) +
                  1.0 / ((1.0 - rho) * (1.0 - rho)));
  double b = e * (1.0 - bs.cache_hit_ratio) /
             (bs.backhaul_rate_bps * (1.0 - rho_t) * (1.0 - rho_t));
  return {a, b};
}

std::vector<int> max_rate_choice(const Problem& pb) {
  std::vector<int> choice(pb.num_points, -1);
  for (int p = 0; p < pb.num_points; ++p) {
    double best = 0.0;
    int best_b = -1;
    for (int b = 0; b < pb.num_bs; ++b) {
      double r = pb.rate(p, b);
      if (r > best) {
        best = r;
        best_b = b;
      }
    }
    if (best_b < 0)
      throw UncoveredError(p, "no station serves traffic point " + std::to_string(p));
    choice[p] = best_b;
  }
  return choice;
}

// <grad psi(eta_bar_prev), eta_new - eta_bar_prev>, with the advertisements
// already computed at eta_bar_prev's loads. Negative whenever the selection
// moved (the descent-direction guarantee).
double descent_inner_product(const Association& eta_new, const Association& eta_bar_prev,
                             const Advertisement& ads, const Problem& pb) {
  double acc = 0.0;
  for (int p = 0; p < pb.num_points; ++p) {
    double row = 0.0;
    for (int b = 0; b < pb.num_bs; ++b) {
      double diff = eta_new.at(p, b) - eta_bar_prev.at(p, b);
      if (diff == 0.0) continue;
      double r = pb.rate(p, b);
      row += diff * (ads.theta_a[b] / r + ads.theta_b[b]);
    }
    acc += pb.demand[p] * row;
  }
  return acc;
}

// Rounding the converged iterate: the advertisements pin every point with a
// clear utility winner, but points whose top utilities are nearly tied are
// exactly the ones split fractionally at the relaxed optimum, and assigning
// them by blind tie-break can miss the binary optimum. Enumerate the
// completions over the most-tied points and keep the exact best, then sweep
// single-point moves until none improves.
constexpr double kTieRelTol = 0.02;
constexpr long kMaxTieCombos = 4096;

double psi_from_loads(const std::vector<double>& rho, const std::vector<double>& flow,
                      const Problem& pb) {
  double kappa = pb.scenario.algorithm.kappa;
  double psi = 0.0;
  for (int b = 0; b < pb.num_bs; ++b) {
    const auto& bs = pb.scenario.base_stations[b];
    double rho_t = (1.0 - bs.cache_hit_ratio) * flow[b] / bs.backhaul_rate_bps;
    if (rho[b] >= 1.0 || rho_t >= 1.0) return kInf;
    psi += energy::latency_weight(rho[b], pb.green_cap[b], kappa) *
           (rho[b] / (1.0 - rho[b]) + rho_t / (1.0 - rho_t));
  }
  return psi;
}

void accumulate_choice(const std::vector<int>& choice, const Problem& pb,
                       std::vector<double>& rho, std::vector<double>& flow) {
  rho.assign(pb.num_bs, 0.0);
  flow.assign(pb.num_bs, 0.0);
  for (int p = 0; p < pb.num_points; ++p) {
    int b = choice[p];
    rho[b] += pb.demand[p] / pb.rate(p, b);
    flow[b] += pb.demand[p];
  }
}

double psi_of_choice(const std::vector<int>& choice, const Problem& pb) {
  std::vector<double> rho, flow;
  accumulate_choice(choice, pb, rho, flow);
  return psi_from_loads(rho, flow, pb);
}

constexpr double kPairWindowRelTol = 0.15;
constexpr int kPairWindowCap = 64;

class RoundingPolisher {
 public:
  RoundingPolisher(const Problem& pb, std::vector<int> choice)
      : pb_(pb), choice_(std::move(choice)) {
    accumulate_choice(choice_, pb_, rho_, flow_);
    cur_ = psi_from_loads(rho_, flow_, pb_);
  }

  double psi() const { return cur_; }
  const std::vector<int>& choice() const { return choice_; }

  bool try_move(int p, int b) {
    int from = choice_[p];
    if (b == from || !(pb_.rate(p, b) > 0.0)) return false;
    apply(p, from, b);
    double psi = psi_from_loads(rho_, flow_, pb_);
    if (psi < cur_) {
      cur_ = psi;
      choice_[p] = b;
      return true;
    }
    apply(p, b, from);
    return false;
  }

  bool try_pair(int p, int bp, int q, int bq) {
    int fp = choice_[p], fq = choice_[q];
    if ((bp == fp && bq == fq) || !(pb_.rate(p, bp) > 0.0) || !(pb_.rate(q, bq) > 0.0))
      return false;
    apply(p, fp, bp);
    apply(q, fq, bq);
    double psi = psi_from_loads(rho_, flow_, pb_);
    if (psi < cur_) {
      cur_ = psi;
      choice_[p] = bp;
      choice_[q] = bq;
      return true;
    }
    apply(q, bq, fq);
    apply(p, bp, fp);
    return false;
  }

 private:
  void apply(int p, int from, int to) {
    rho_[from] -= pb_.demand[p] / pb_.rate(p, from);
    flow_[from] -= pb_.demand[p];
    rho_[to] += pb_.demand[p] / pb_.rate(p, to);
    flow_[to] += pb_.demand[p];
  }

  const Problem& pb_;
  std::vector<int> choice_;
  std::vector<double> rho_, flow_;
  double cur_;
};

Association finalize_binary(const Problem& pb, const Advertisement& ads) {
  int P = pb.num_points, B = pb.num_bs;
  std::vector<int> choice(P);
  std::vector<std::vector<int>> candidates(P);
  std::vector<std::pair<double, int>> gaps;  // (relative utility gap to runner-up, point)
  for (int p = 0; p < P; ++p) {
    std::span<const double> row{pb.rates.data() + static_cast<size_t>(p) * B,
                                static_cast<size_t>(B)};
    choice[p] = select_bs(row, ads);
    double best_u =
        row[choice[p]] / (ads.theta_a[choice[p]] + row[choice[p]] * ads.theta_b[choice[p]]);
    double runner_gap = kInf;
    for (int b = 0; b < B; ++b) {
      double r = row[b];
      if (!(r > 0.0)) continue;
      double u = r / (ads.theta_a[b] + r * ads.theta_b[b]);
      double gap = (best_u - u) / best_u;
      if (gap <= kTieRelTol) candidates[p].push_back(b);
      if (b != choice[p]) runner_gap = std::min(runner_gap, gap);
    }
    gaps.emplace_back(runner_gap, p);
  }

  // Enumerate completions over the most-tied points.
  std::vector<std::pair<double, int>> tied;
  for (auto& g : gaps)
    if (candidates[g.second].size() > 1) tied.push_back(g);
  if (!tied.empty()) {
    std::sort(tied.begin(), tied.end());
    std::vector<int> enumerated;
    long combos = 1;
    for (auto& [gap, p] : tied) {
      long next = combos * static_cast<long>(candidates[p].size());
      if (next > kMaxTieCombos) break;
      combos = next;
      enumerated.push_back(p);
    }
    if (!enumerated.empty()) {
      std::vector<int> digit(enumerated.size(), 0);
      std::vector<int> trial = choice;
      double best_psi = kInf;
      std::vector<int> best_choice = choice;
      while (true) {
        for (size_t i = 0; i < enumerated.size(); ++i)
          trial[enumerated[i]] = candidates[enumerated[i]][digit[i]];
        double psi = psi_of_choice(trial, pb);
        if (psi < best_psi) {
          best_psi = psi;
          best_choice = trial;
        }
        size_t i = 0;
        while (i < digit.size() &&
               ++digit[i] == static_cast<int>(candidates[enumerated[i]].size()))
          digit[i++] = 0;
        if (i == digit.size()) break;
      }
      choice = best_choice;
    }
  }

  // Single-point and pair moves; each accepted move strictly lowers the
  // objective, so the sweeps terminate. Pair moves cover points whose
  // utilities run close enough that two roundings interact.
  std::vector<int> window;
  {
    std::sort(gaps.begin(), gaps.end());
    for (auto& [gap, p] : gaps) {
      if (gap > kPairWindowRelTol || static_cast<int>(window.size()) >= kPairWindowCap) break;
      window.push_back(p);
    }
    std::sort(window.begin(), window.end());
  }

  RoundingPolisher polish(pb, std::move(choice));
  for (int round = 0; round < 32; ++round) {
    bool moved = false;
    for (int pass = 0; pass < 64; ++pass) {
      bool single = false;
      for (int p = 0; p < P; ++p)
        for (int b = 0; b < B; ++b) single |= polish.try_move(p, b);
      moved |= single;
      if (!single) break;
    }
    bool paired = false;
    for (size_t i = 0; i < window.size(); ++i)
      for (size_t j = i + 1; j < window.size(); ++j)
        for (int bp = 0; bp < B; ++bp)
          for (int bq = 0; bq < B; ++bq) paired |= polish.try_pair(window[i], bp, window[j], bq);
    if (!paired && !moved) break;
  }
  return Association::one_hot(polish.choice(), pb.num_bs);
}

std::optional<double> choose_delta_impl(const Association& eta_new,
                                        const Association& eta_bar_prev, const Problem& pb,
                                        const RunOptions& opts, double psi_prev) {
  if (!(opts.delta0 > 0.0 && opts.delta0 < 1.0))
    throw std::domain_error("choose_delta: delta0 must lie in (0,1)");
  if (eta_new == eta_bar_prev)
    throw std::domain_error("choose_delta: associations are identical");

  double step = 1.0 - opts.delta0;
  for (int t = 0; t < opts.max_backtracks; ++t) {
    double delta = 1.0 - step;
    if (!(delta > 0.0 && delta < 1.0)) break;
    double psi = evaluate(intermediate_update(eta_new, eta_bar_prev, delta), pb).psi;
    if (psi < psi_prev) return delta;
    step *= 0.5;
  }

  // A saturated starting point needs the opposite schedule: bigger steps
  // toward the freshly selected association until the objective is finite.
  if (std::isinf(psi_prev)) {
    double delta = opts.delta0;
    for (int t = 0; t < opts.max_backtracks; ++t) {
      delta *= 0.5;
      if (!(delta > 0.0)) break;
      double psi = evaluate(intermediate_update(eta_new, eta_bar_prev, delta), pb).psi;
      if (psi < psi_prev) return delta;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Converged: return "converged";
    case RunStatus::MaxIterations: return "max_iterations";
    case RunStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

double objective(const Association& assoc, const Problem& pb) { return evaluate(assoc, pb).psi; }

double objective(const Association& assoc, const Scenario& scenario) {
  return objective(assoc, Problem::from_scenario(scenario));
}

double gradient(const Association& assoc, const Problem& pb, int point, int bs) {
  if (point < 0 || point >= pb.num_points || bs < 0 || bs >= pb.num_bs)
    throw std::out_of_range("gradient: index out of range");
  Evaluation ev = evaluate(assoc, pb);
  if (std::isinf(ev.psi))
    throw SaturationError("gradient undefined: station " +
                          std::to_string(pb.scenario.base_stations[ev.witness].id) +
                          " is saturated");
  Theta th = theta_at(ev.loads.bs_load[bs], ev.loads.backhaul_load[bs], pb.green_cap[bs],
                      pb.scenario.base_stations[bs], pb.scenario.algorithm.kappa);
  double r = pb.rate(point, bs);
  if (!(r > 0.0)) return kInf;
  return pb.demand[point] / r * th.a + pb.demand[point] * th.b;
}

double gradient(const Association& assoc, const Scenario& scenario, int point, int bs) {
  return gradient(assoc, Problem::from_scenario(scenario), point, bs);
}

Advertisement advertise(const queueing::LoadState& loads, const Problem& pb) {
  double cap = 1.0 - pb.scenario.algorithm.epsilon;
  Advertisement ads;
  ads.theta_a.resize(pb.num_bs);
  ads.theta_b.resize(pb.num_bs);
  for (int b = 0; b < pb.num_bs; ++b) {
    double rho = std::min(loads.bs_load[b], cap);
    double rho_t = std::min(loads.backhaul_load[b], cap);
    Theta th = theta_at(rho, rho_t, pb.green_cap[b], pb.scenario.base_stations[b],
                        pb.scenario.algorithm.kappa);
    ads.theta_a[b] = th.a;
    ads.theta_b[b] = th.b;
  }
  return ads;
}

int select_bs(std::span<const double> rates, const Advertisement& ads) {
  int best = -1;
  double best_utility = -kInf;
  for (size_t b = 0; b < rates.size(); ++b) {
    double r = rates[b];
    if (!(r > 0.0)) continue;
    double utility = r / (ads.theta_a[b] + r * ads.theta_b[b]);
    if (utility > best_utility) {
      best_utility = utility;
      best = static_cast<int>(b);
    }
  }
  if (best < 0) throw UncoveredError(-1, "no station with positive rate at this location");
  return best;
}

Association association_step(const Problem& pb, const Advertisement& ads) {
  std::vector<int> choice(pb.num_points);
  for (int p = 0; p < pb.num_points; ++p) {
    std::span<const double> row{pb.rates.data() + static_cast<size_t>(p) * pb.num_bs,
                                static_cast<size_t>(pb.num_bs)};
    try {
      choice[p] = select_bs(row, ads);
    } catch (const UncoveredError&) {
      throw UncoveredError(p, "no station serves traffic point " + std::to_string(p));
    }
  }
  return Association::one_hot(choice, pb.num_bs);
}

Association intermediate_update(const Association& eta_new, const Association& eta_bar_prev,
                                double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("intermediate_update: delta must lie in (0,1)");
  if (eta_new.num_points() != eta_bar_prev.num_points() ||
      eta_new.num_bs() != eta_bar_prev.num_bs())
    throw std::invalid_argument("intermediate_update: dimensions differ");
  Association out(eta_new.num_points(), eta_new.num_bs());
  for (int p = 0; p < out.num_points(); ++p)
    for (int b = 0; b < out.num_bs(); ++b)
      out.at(p, b) = (1.0 - delta) * eta_new.at(p, b) + delta * eta_bar_prev.at(p, b);
  return out;
}

std::optional<double> choose_delta(const Association& eta_new, const Association& eta_bar_prev,
                                   const Problem& pb, const RunOptions& opts) {
  return choose_delta_impl(eta_new, eta_bar_prev, pb, opts, evaluate(eta_bar_prev, pb).psi);
}

RunResult run(const Problem& pb, const RunOptions& opts) {
  if (opts.max_iters < 1) throw std::invalid_argument("run: max_iters must be at least 1");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("run: tol must be positive");
  const double eps = pb.scenario.algorithm.epsilon;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<int> init = opts.initial_choice ? *opts.initial_choice : max_rate_choice(pb);
  Association eta_bar = Association::one_hot(init, pb.num_bs);

  Evaluation ev = evaluate(eta_bar, pb);
  IterationTrace trace;
  trace.records.push_back(
      {0, ev.psi, 0.0, 0.0, ev.loads.bs_load, ev.loads.backhaul_load, nan});

  double psi_prev = ev.psi;
  RunStatus status = RunStatus::MaxIterations;
  int iterations = opts.max_iters;

  for (int k = 1; k <= opts.max_iters; ++k) {
    Advertisement ads = advertise(ev.loads, pb);
    Association eta_new = association_step(pb, ads);
    if (eta_new == eta_bar) {
      status = RunStatus::Converged;
      iterations = k;
      break;
    }

    double descent = nan;
    if (opts.check_descent) descent = descent_inner_product(eta_new, eta_bar, ads, pb);

    auto delta = choose_delta_impl(eta_new, eta_bar, pb, opts, psi_prev);
    if (!delta) {  // stagnation: no averaging parameter improves the objective
      status = RunStatus::Converged;
      iterations = k;
      break;
    }

    Association next = intermediate_update(eta_new, eta_bar, *delta);
    double change = next.max_abs_diff(eta_bar);
    eta_bar = std::move(next);
    ev = evaluate(eta_bar, pb);
    trace.records.push_back(
        {k, ev.psi, *delta, change, ev.loads.bs_load, ev.loads.backhaul_load, descent});

    double rel = std::abs(psi_prev - ev.psi) / std::abs(psi_prev);
    psi_prev = ev.psi;
    if (rel < opts.tol) {
      status = RunStatus::Converged;
      iterations = k;
      break;
    }
  }

  // Final answer: the binary selection under the stabilized advertisements,
  // with near-tied points resolved by exact objective comparison.
  Advertisement final_ads = advertise(ev.loads, pb);
  Association final_assoc = finalize_binary(pb, final_ads);
  Evaluation final_ev = evaluate(final_assoc, pb);

  if (!final_ev.loads.feasible(eps)) {
    status = RunStatus::Infeasible;
    trace.witness_bs = final_ev.loads.worst_bs();
  }

  trace.status = status;
  trace.iterations = iterations;

  RunResult result;
  result.association = std::move(final_assoc);
  result.loads = std::move(final_ev.loads);
  result.energy = energy::compute(result.loads, pb);
  result.trace = std::move(trace);
  result.psi = final_ev.psi;
  result.status = status;
  result.iterations = iterations;
  return result;
}

RunResult run(const Scenario& scenario, const RunOptions& opts) {
  return run(Problem::from_scenario(scenario), opts);
}

}  // namespace scnlb::nua
