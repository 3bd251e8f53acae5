#include "scnlb/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "scnlb/errors.hpp"

namespace scnlb::report {

using nlohmann::json;

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

MetricsBundle compute_metrics(const Association& assoc, const Problem& pb) {
  auto loads = queueing::loads(assoc, pb);
  if (loads.saturated())
    throw SaturationError("compute_metrics: station " +
                          std::to_string(pb.scenario.base_stations[loads.worst_bs()].id) +
                          " is saturated");
  auto energy = energy::compute(loads, pb);

  MetricsBundle bundle;
  for (int b = 0; b < pb.num_bs; ++b) {
    const auto& bs = pb.scenario.base_stations[b];
    PerBsMetrics m;
    m.id = bs.id;
    m.kind = bs.kind;
    m.x = bs.position.x;
    m.y = bs.position.y;
    m.rho = loads.bs_load[b];
    m.rho_tilde = loads.backhaul_load[b];
    m.latency_weight = energy.latency_weight[b];
    m.mu = queueing::latency_ratio(m.rho);
    m.mu_tilde = queueing::latency_ratio(m.rho_tilde);
    m.power_w = energy.power_w[b];
    m.brown_power_w = energy.brown_power_w[b];
    for (int p = 0; p < pb.num_points; ++p)
      if (assoc.at(p, b) > 0.0) ++m.point_count;
    bundle.per_bs.push_back(m);
    bundle.psi += m.latency_weight * (m.mu + m.mu_tilde);
    bundle.latency_index += m.mu + m.mu_tilde;
    bundle.brown_power_total_w += m.brown_power_w;
  }
  return bundle;
}

MetricsBundle compute_metrics(const Association& assoc, const Scenario& scenario) {
  return compute_metrics(assoc, Problem::from_scenario(scenario));
}

CoverageMap coverage_map(const Association& assoc, const Scenario& scenario) {
  if (!assoc.is_binary())
    throw std::invalid_argument("coverage_map: association must be binary");
  CoverageMap map;
  map.nx = scenario.grid_nx;
  map.ny = scenario.grid_ny;
  map.bs_id.resize(scenario.num_points());
  for (int p = 0; p < scenario.num_points(); ++p) {
    int b = assoc.assigned_bs(p);
    if (b < 0) throw std::invalid_argument("coverage_map: unassigned traffic point");
    map.bs_id[p] = scenario.base_stations[b].id;
  }
  for (const auto& bs : scenario.base_stations)
    map.bs_positions.emplace_back(bs.id, bs.position);
  return map;
}

namespace {

json bundle_to_json(const MetricsBundle& bundle, const RunMeta& meta) {
  json j;
  j["schema_version"] = 1;
  j["scheme"] = meta.scheme;
  j["status"] = meta.status;
  j["iterations"] = meta.iterations;
  j["kappa"] = meta.kappa;
  if (meta.best_bias) j["best_bias"] = *meta.best_bias;
  j["psi"] = bundle.psi;
  j["latency_index"] = bundle.latency_index;
  j["brown_power_total_w"] = bundle.brown_power_total_w;
  json per_bs = json::array();
  for (const auto& m : bundle.per_bs) {
    per_bs.push_back({{"id", m.id},
                      {"kind", to_string(m.kind)},
                      {"x", m.x},
                      {"y", m.y},
                      {"rho", m.rho},
                      {"rho_tilde", m.rho_tilde},
                      {"latency_weight", m.latency_weight},
                      {"mu", m.mu},
                      {"mu_tilde", m.mu_tilde},
                      {"power_w", m.power_w},
                      {"brown_power_w", m.brown_power_w},
                      {"point_count", m.point_count}});
  }
  j["per_bs"] = std::move(per_bs);
  return j;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write file: " + path.string());
  return out;
}

}  // namespace

void write_metrics_json(const std::filesystem::path& path, const MetricsBundle& bundle,
                        const RunMeta& meta) {
  auto out = open_for_write(path);
  out << bundle_to_json(bundle, meta).dump(2) << '\n';
}

void write_per_bs_csv(const std::filesystem::path& path, const MetricsBundle& bundle) {
  auto out = open_for_write(path);
  out << "bs_id,kind,x,y,rho,rho_tilde,latency_weight,mu,mu_tilde,power_w,brown_power_w,"
         "point_count\n";
  double mu = 0.0, mu_t = 0.0, power = 0.0, brown = 0.0;
  long points = 0;
  for (const auto& m : bundle.per_bs) {
    out << m.id << ',' << to_string(m.kind) << ',' << format_g12(m.x) << ',' << format_g12(m.y)
        << ',' << format_g12(m.rho) << ',' << format_g12(m.rho_tilde) << ','
        << format_g12(m.latency_weight) << ',' << format_g12(m.mu) << ','
        << format_g12(m.mu_tilde) << ',' << format_g12(m.power_w) << ','
        << format_g12(m.brown_power_w) << ',' << m.point_count << '\n';
    mu += m.mu;
    mu_t += m.mu_tilde;
    power += m.power_w;
    brown += m.brown_power_w;
    points += m.point_count;
  }
  out << "total,,,,,,," << format_g12(mu) << ',' << format_g12(mu_t) << ',' << format_g12(power)
      << ',' << format_g12(brown) << ',' << points << '\n';
}

void write_coverage_csv(const std::filesystem::path& path, const CoverageMap& map) {
  if (static_cast<size_t>(map.nx) * map.ny != map.bs_id.size())
    throw std::invalid_argument("coverage map dimensions do not match cell count");
  auto out = open_for_write(path);
  for (int iy = 0; iy < map.ny; ++iy) {
    for (int ix = 0; ix < map.nx; ++ix) {
      if (ix) out << ',';
      out << map.bs_id[static_cast<size_t>(iy) * map.nx + ix];
    }
    out << '\n';
  }
}

void write_trace_csv(const std::filesystem::path& path, const nua::IterationTrace& trace,
                     const Scenario& scenario) {
  auto out = open_for_write(path);
  out << "iter,psi,delta,max_eta_change";
  for (const auto& bs : scenario.base_stations) out << ",rho_" << bs.id;
  for (const auto& bs : scenario.base_stations) out << ",rho_tilde_" << bs.id;
  out << '\n';
  for (const auto& rec : trace.records) {
    out << rec.iter << ',' << format_g12(rec.psi) << ',' << format_g12(rec.delta) << ','
        << format_g12(rec.max_eta_change);
    for (double v : rec.bs_load) out << ',' << format_g12(v);
    for (double v : rec.backhaul_load) out << ',' << format_g12(v);
    out << '\n';
  }
}

void export_metrics(const MetricsBundle& bundle, const RunMeta& meta, Format format,
                    const std::filesystem::path& path) {
  if (format == Format::Json)
    write_metrics_json(path, bundle, meta);
  else
    write_per_bs_csv(path, bundle);
}

}  // namespace scnlb::report
