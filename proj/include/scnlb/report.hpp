#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scnlb/nua.hpp"
#include "scnlb/problem.hpp"

namespace scnlb::report {

struct PerBsMetrics {
  int id = 0;
  BsKind kind = BsKind::Small;
  double x = 0.0;
  double y = 0.0;
  double rho = 0.0;
  double rho_tilde = 0.0;
  double latency_weight = 0.0;
  double mu = 0.0;
  double mu_tilde = 0.0;
  double power_w = 0.0;
  double brown_power_w = 0.0;
  int point_count = 0;
};

struct MetricsBundle {
  double psi = 0.0;
  double latency_index = 0.0;       // sum_j (mu_j + mu~_j), unweighted
  double brown_power_total_w = 0.0;
  std::vector<PerBsMetrics> per_bs;
};

/// All published quantities of a final association. Throws SaturationError
/// when the association drives any queue to 1 or beyond.
MetricsBundle compute_metrics(const Association& assoc, const Problem& problem);
MetricsBundle compute_metrics(const Association& assoc, const Scenario& scenario);

struct CoverageMap {
  int nx = 0;
  int ny = 0;
  std::vector<int> bs_id;  // serving station id per grid cell, row-major
  std::vector<std::pair<int, Location>> bs_positions;
};

/// Requires a binary association.
CoverageMap coverage_map(const Association& assoc, const Scenario& scenario);

/// Extra run facts carried into the results file.
struct RunMeta {
  std::string scheme;
  std::string status;
  int iterations = 0;
  double kappa = 0.0;
  std::optional<double> best_bias;
};

// File emitters. JSON uses exact double round-tripping; CSV numeric fields
// carry 12 significant digits.
void write_metrics_json(const std::filesystem::path& path, const MetricsBundle& bundle,
                        const RunMeta& meta);
void write_per_bs_csv(const std::filesystem::path& path, const MetricsBundle& bundle);
void write_coverage_csv(const std::filesystem::path& path, const CoverageMap& map);
void write_trace_csv(const std::filesystem::path& path, const nua::IterationTrace& trace,
                     const Scenario& scenario);

enum class Format { Json, Csv };

/// Spec-level convenience: metrics to one file in the chosen format.
void export_metrics(const MetricsBundle& bundle, const RunMeta& meta, Format format,
                    const std::filesystem::path& path);

/// printf "%.12g", shared by every CSV writer.
std::string format_g12(double v);

}  // namespace scnlb::report
