#include "scnlb/energy.hpp"

#include <algorithm>
#include <cmath>

namespace scnlb::energy {

double EnergyState::total_brown_w() const {
  double sum = 0.0;
  for (double v : brown_power_w) sum += v;
  return sum;
}

double bs_power_w(double load, const BaseStation& bs) {
  return bs.load_power_coeff_w * load + bs.static_power_w;
}

double brown_power_w(double power_w, double green_supply_w) {
  return std::max(power_w - green_supply_w, 0.0);
}

double green_capacity(const BaseStation& bs, double epsilon) {
  double cap = (bs.green_supply_w - bs.static_power_w) / bs.load_power_coeff_w;
  return std::max(0.0, std::min(cap, 1.0 - epsilon));
}

double latency_weight(double load, double green_cap, double kappa) {
  return std::exp(kappa * (load - green_cap));
}

EnergyState compute(const queueing::LoadState& loads, const Problem& pb) {
  EnergyState st;
  int n = pb.num_bs;
  st.power_w.resize(n);
  st.brown_power_w.resize(n);
  st.green_capacity = pb.green_cap;
  st.latency_weight.resize(n);
  double kappa = pb.scenario.algorithm.kappa;
  for (int b = 0; b < n; ++b) {
    const auto& bs = pb.scenario.base_stations[b];
    st.power_w[b] = bs_power_w(loads.bs_load[b], bs);
    st.brown_power_w[b] = brown_power_w(st.power_w[b], bs.green_supply_w);
    st.latency_weight[b] = latency_weight(loads.bs_load[b], pb.green_cap[b], kappa);
  }
  return st;
}

}  // namespace scnlb::energy
