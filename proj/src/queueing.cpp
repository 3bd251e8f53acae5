#include "scnlb/queueing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "scnlb/errors.hpp"

namespace scnlb::queueing {

namespace {

void check_dims(const Association& assoc, const Problem& pb) {
  if (assoc.num_points() != pb.num_points || assoc.num_bs() != pb.num_bs)
    throw std::invalid_argument("association dimensions do not match the problem");
}

}  // namespace

bool LoadState::feasible(double epsilon) const {
  double cap = 1.0 - epsilon;
  for (double v : bs_load)
    if (!(v >= 0.0 && v <= cap)) return false;
  for (double v : backhaul_load)
    if (!(v >= 0.0 && v <= cap)) return false;
  return true;
}

bool LoadState::saturated() const {
  for (double v : bs_load)
    if (v >= 1.0) return true;
  for (double v : backhaul_load)
    if (v >= 1.0) return true;
  return false;
}

int LoadState::worst_bs() const {
  int worst = -1;
  double worst_load = -1.0;
  for (size_t b = 0; b < bs_load.size(); ++b) {
    double v = std::max(bs_load[b], backhaul_load[b]);
    if (v > worst_load) {
      worst_load = v;
      worst = static_cast<int>(b);
    }
  }
  return worst;
}

std::vector<double> bs_load(const Association& assoc, const Problem& pb) {
  check_dims(assoc, pb);
  std::vector<double> rho(pb.num_bs, 0.0);
  for (int b = 0; b < pb.num_bs; ++b) {
    double acc = 0.0;
    for (int p = 0; p < pb.num_points; ++p) {
      double w = assoc.at(p, b);
      if (w == 0.0) continue;
      double r = pb.rate(p, b);
      if (!(r > 0.0))
        throw InfeasibleError(p, b,
                              "association weight on zero-rate station: point " +
                                  std::to_string(p) + ", BS " +
                                  std::to_string(pb.scenario.base_stations[b].id));
      acc += pb.demand[p] * w / r;
    }
    rho[b] = acc;
  }
  return rho;
}

std::vector<double> backhaul_load(const Association& assoc, const Problem& pb) {
  check_dims(assoc, pb);
  std::vector<double> rho(pb.num_bs, 0.0);
  for (int b = 0; b < pb.num_bs; ++b) {
    const auto& bs = pb.scenario.base_stations[b];
    double acc = 0.0;
    for (int p = 0; p < pb.num_points; ++p) {
      double w = assoc.at(p, b);
      if (w == 0.0) continue;
      acc += pb.demand[p] * w;
    }
    rho[b] = (1.0 - bs.cache_hit_ratio) * acc / bs.backhaul_rate_bps;
  }
  return rho;
}

std::vector<double> bs_load(const Association& assoc, const Scenario& scenario) {
  return bs_load(assoc, Problem::from_scenario(scenario));
}

std::vector<double> backhaul_load(const Association& assoc, const Scenario& scenario) {
  return backhaul_load(assoc, Problem::from_scenario(scenario));
}

LoadState loads(const Association& assoc, const Problem& pb) {
  return {bs_load(assoc, pb), backhaul_load(assoc, pb)};
}

double latency_ratio(double load) {
  if (load < 0.0) throw std::domain_error("latency_ratio: negative load");
  if (load >= 1.0)
    throw SaturationError("latency_ratio: load " + std::to_string(load) + " saturates the queue");
  return load / (1.0 - load);
}

DelayBreakdown per_user_delay(Location loc, int bs, const LoadState& state,
                              const Scenario& scenario) {
  if (bs < 0 || bs >= scenario.num_bs()) throw std::out_of_range("per_user_delay: bad station");
  double best = std::numeric_limits<double>::infinity();
  const TrafficPoint* nearest = nullptr;
  for (const auto& tp : scenario.traffic) {
    double d = distance_m(tp.location, loc);
    if (d < best) {
      best = d;
      nearest = &tp;
    }
  }
  double nu = nearest->mean_size_bits;
  double r = rate_bps(loc, bs, scenario);
  if (!(r > 0.0))
    throw UncoveredError(-1, "per_user_delay: station " +
                                 std::to_string(scenario.base_stations[bs].id) +
                                 " is unusable at this location");
  double rho = state.bs_load[bs];
  double rho_t = state.backhaul_load[bs];
  if (rho >= 1.0 || rho_t >= 1.0)
    throw SaturationError("per_user_delay: station " +
                          std::to_string(scenario.base_stations[bs].id) + " is saturated");
  double R = scenario.base_stations[bs].backhaul_rate_bps;
  return {
      .bs_delivery_s = nu / (r * (1.0 - rho)),
      .bs_wait_s = rho * nu / (r * (1.0 - rho)),
      .backhaul_wait_s = rho_t * nu / (R * (1.0 - rho_t)),
  };
}

}  // namespace scnlb::queueing
