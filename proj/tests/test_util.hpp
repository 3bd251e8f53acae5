// Shared helpers for the test suites: synthetic scenarios, independent
// objective oracles, and small-instance generators. Everything here stays
// independent of the library's own objective/load code paths so it can act
// as an oracle for them.
#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "scnlb/association.hpp"
#include "scnlb/problem.hpp"
#include "scnlb/rng.hpp"
#include "scnlb/scenario.hpp"

namespace testutil {

// A scenario whose geometry is irrelevant: rates are injected directly via
// Problem::from_rates. Per-point demand in bits/s arrives through
// mean_size_bits with arrival_rate = cell_area = 1.
inline scnlb::Scenario synthetic_scenario(int n_bs, const std::vector<double>& demands) {
  scnlb::Scenario sc;
  int n = static_cast<int>(demands.size());
  sc.area = {0.0, 0.0, 1000.0, 1000.0};
  sc.grid_nx = n;
  sc.grid_ny = 1;
  for (int b = 0; b < n_bs; ++b) {
    scnlb::BaseStation bs;
    bs.id = b + 1;
    bs.kind = scnlb::BsKind::Small;
    bs.position = {50.0 + 100.0 * b, 500.0};
    bs.backhaul_rate_bps = 5e6;
    sc.base_stations.push_back(bs);
  }
  for (int p = 0; p < n; ++p) {
    scnlb::TrafficPoint tp;
    tp.location = {10.0 + 980.0 * p / std::max(1, n), 100.0};
    tp.arrival_rate = 1.0;
    tp.mean_size_bits = demands[p] > 0.0 ? demands[p] : 1.0;
    if (demands[p] <= 0.0) tp.arrival_rate = 0.0;
    tp.cell_area_m2 = 1.0;
    sc.traffic.push_back(tp);
  }
  return sc;
}

// Independent objective evaluation in long double, straight from the model
// formulas. Accepts non-row-stochastic eta (finite-difference probes).
inline double oracle_psi(const std::vector<double>& eta, const scnlb::Problem& pb) {
  int P = pb.num_points, B = pb.num_bs;
  long double psi = 0.0L;
  for (int b = 0; b < B; ++b) {
    const auto& bs = pb.scenario.base_stations[b];
    long double rho = 0.0L, flow = 0.0L;
    for (int p = 0; p < P; ++p) {
      long double w = eta[static_cast<size_t>(p) * B + b];
      if (w == 0.0L) continue;
      double r = pb.rate(p, b);
      if (!(r > 0.0)) return std::numeric_limits<double>::infinity();
      rho += static_cast<long double>(pb.demand[p]) * w / r;
      flow += static_cast<long double>(pb.demand[p]) * w;
    }
    long double rho_t = (1.0L - bs.cache_hit_ratio) * flow / bs.backhaul_rate_bps;
    if (rho >= 1.0L || rho_t >= 1.0L) return std::numeric_limits<double>::infinity();
    long double w_lat =
        std::exp(static_cast<long double>(pb.scenario.algorithm.kappa) * (rho - pb.green_cap[b]));
    psi += w_lat * (rho / (1.0L - rho) + rho_t / (1.0L - rho_t));
  }
  return static_cast<double>(psi);
}

inline std::vector<double> one_hot_eta(const std::vector<int>& choice, int n_bs) {
  std::vector<double> eta(choice.size() * n_bs, 0.0);
  for (size_t p = 0; p < choice.size(); ++p) eta[p * n_bs + choice[p]] = 1.0;
  return eta;
}

// Exhaustive minimum of the objective over all binary associations.
inline double brute_force_min_psi(const scnlb::Problem& pb) {
  int P = pb.num_points, B = pb.num_bs;
  std::vector<int> choice(P, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    best = std::min(best, oracle_psi(one_hot_eta(choice, B), pb));
    int p = 0;
    while (p < P && ++choice[p] == B) choice[p++] = 0;
    if (p == P) break;
  }
  return best;
}

// Random small instance with directly injected rates, sized for exhaustive
// enumeration. Per-point demands are kept light (loads of a few percent per
// point) so instances stay well inside the feasible region.
inline scnlb::Problem random_small_problem(std::uint64_t seed, int n_bs, int n_points,
                                           double kappa = 0.0) {
  std::mt19937_64 gen(seed);
  std::vector<double> demands(n_points);
  for (auto& d : demands) d = scnlb::rng_uniform(gen, 0.05e6, 0.3e6);
  scnlb::Scenario sc = synthetic_scenario(n_bs, demands);
  sc.algorithm.kappa = kappa;
  for (auto& bs : sc.base_stations) {
    bs.backhaul_rate_bps = scnlb::rng_uniform(gen, 4e6, 12e6);
    bs.cache_hit_ratio = scnlb::rng_uniform(gen, 0.0, 0.4);
    bs.green_supply_w = scnlb::rng_uniform(gen, 30.0, 50.0);
  }
  std::vector<double> rates(static_cast<size_t>(n_points) * n_bs);
  for (auto& r : rates) r = scnlb::rng_uniform(gen, 2e6, 40e6);
  return scnlb::Problem::from_rates(std::move(sc), std::move(rates));
}

// Random fractional association, rows on the simplex.
inline scnlb::Association random_association(std::uint64_t seed, int n_points, int n_bs) {
  std::mt19937_64 gen(seed);
  scnlb::Association a(n_points, n_bs);
  for (int p = 0; p < n_points; ++p) {
    double sum = 0.0;
    for (int b = 0; b < n_bs; ++b) {
      double v = scnlb::rng_uniform(gen, 0.01, 1.0);
      a.at(p, b) = v;
      sum += v;
    }
    for (int b = 0; b < n_bs; ++b) a.at(p, b) /= sum;
  }
  return a;
}

inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fnv1a(bytes);
}

}  // namespace testutil
