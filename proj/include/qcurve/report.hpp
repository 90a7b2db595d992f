#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcurve/evolution.hpp"
#include "qcurve/oracles.hpp"

namespace qcurve {

struct OracleSummary {
  double kappa_lt_normalized = 0.0;
  double tau_lt_normalized = 0.0;
  double kappa_fit_residual = 0.0;
  double tau_fit_residual = 0.0;
  std::vector<double> dt_grid;
};

struct GeometryReport {
  std::size_t dimension = 0;
  double energy = 0.0;
  double speed = 0.0;
  // Clamped values; the raw numbers before clamping sit in `raw_*`.
  double kappa_sq_moments = 0.0;
  double kappa_sq_geometric = 0.0;
  double tau_sq_moments = 0.0;
  double tau_sq_geometric = 0.0;
  double raw_tau_sq_moments = 0.0;
  double alpha3 = 0.0;
  double alpha4 = 0.0;
  double pearson_gap = 0.0;
  /// Largest deviation of the geometric values over the s samples.
  double kappa_sq_spread = 0.0;
  double tau_sq_spread = 0.0;
  int s_samples = 0;
  std::optional<OracleSummary> oracle;
  bool frame_present = false;
  double gamma = kDefaultGamma;
  std::vector<std::string> warnings;
};

struct ReportOptions {
  double gamma = kDefaultGamma;
  /// Absolute steps; empty selects default_dt_grid().
  std::vector<double> dt_grid;
  int s_samples = 10;
  bool oracle = false;
};

/// Throws StationaryStateError for eigenstates.
GeometryReport make_report(const EvolutionProblem& problem, const ReportOptions& options);

/// Pretty-printed JSON; NaN prints as null, other doubles as shortest
/// round-trip decimals.
std::string report_to_json(const GeometryReport& report);

/// Shortest round-trip text for CSV cells ("nan" for NaN).
std::string format_double(double value);

}  // namespace qcurve
