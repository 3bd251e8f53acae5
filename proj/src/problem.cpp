#include "scnlb/problem.hpp"

#include <stdexcept>

#include "scnlb/energy.hpp"
#include "scnlb/errors.hpp"

namespace scnlb {

namespace {

void fill_derived(Problem& pb) {
  const Scenario& sc = pb.scenario;
  pb.num_points = sc.num_points();
  pb.num_bs = sc.num_bs();
  pb.demand.resize(pb.num_points);
  for (int p = 0; p < pb.num_points; ++p) pb.demand[p] = sc.traffic[p].demand_bps();
  pb.green_cap.resize(pb.num_bs);
  for (int b = 0; b < pb.num_bs; ++b)
    pb.green_cap[b] = energy::green_capacity(sc.base_stations[b], sc.algorithm.epsilon);
}

}  // namespace

Problem Problem::from_scenario(const Scenario& scenario) {
  scenario.validate();
  Problem pb;
  pb.scenario = scenario;
  fill_derived(pb);
  pb.rates.resize(static_cast<size_t>(pb.num_points) * pb.num_bs);
  for (int p = 0; p < pb.num_points; ++p) {
    Location loc = scenario.traffic[p].location;
    for (int b = 0; b < pb.num_bs; ++b)
      pb.rates[static_cast<size_t>(p) * pb.num_bs + b] = rate_bps(loc, b, scenario);
  }
  return pb;
}

Problem Problem::from_rates(Scenario scenario, std::vector<double> rates) {
  scenario.validate();
  if (rates.size() != scenario.traffic.size() * scenario.base_stations.size())
    throw std::invalid_argument("rate table size does not match scenario dimensions");
  Problem pb;
  pb.scenario = std::move(scenario);
  fill_derived(pb);
  pb.rates = std::move(rates);
  return pb;
}

}  // namespace scnlb
