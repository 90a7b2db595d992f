#include "qcurve/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "qcurve/frame.hpp"
#include "qcurve/moments.hpp"
#include "json.hpp"

namespace qcurve {

namespace {

constexpr double kPathAgreement = 1e-8;

// Samples spread over one period of the slowest possible return, 2*pi/v in
// time, i.e. s in [0, 2*pi).
double sample_point(int k, int n) { return 2.0 * std::numbers::pi * k / n; }

}  // namespace

GeometryReport make_report(const EvolutionProblem& problem, const ReportOptions& options) {
  problem.require_moving();
  const MomentSet& m = problem.moments();

  GeometryReport r;
  r.dimension = problem.dim();
  r.energy = problem.energy();
  r.speed = problem.speed();
  r.gamma = options.gamma;
  r.alpha3 = m.alpha3();
  r.alpha4 = m.alpha4();
  r.pearson_gap = pearson_gap(m);
  r.kappa_sq_moments = clamp_rounding(curvature_from_moments(m));
  r.raw_tau_sq_moments = torsion_from_moments(m);
  r.tau_sq_moments = clamp_rounding(r.raw_tau_sq_moments);
  r.kappa_sq_geometric = curvature_geometric(problem, 0.0);
  r.tau_sq_geometric = torsion_geometric(problem, 0.0);
  r.s_samples = std::max(options.s_samples, 1);

  for (int k = 1; k < r.s_samples; ++k) {
    const double s = sample_point(k, r.s_samples);
    r.kappa_sq_spread = std::max(r.kappa_sq_spread, std::abs(curvature_geometric(problem, s) - r.kappa_sq_geometric));
    r.tau_sq_spread = std::max(r.tau_sq_spread, std::abs(torsion_geometric(problem, s) - r.tau_sq_geometric));
  }

  if (std::abs(r.kappa_sq_moments - r.kappa_sq_geometric) > kPathAgreement * std::max(1.0, r.kappa_sq_moments)) {
    r.warnings.push_back("curvature differs between moments and geometric paths");
  }
  if (std::abs(r.tau_sq_moments - r.tau_sq_geometric) > kPathAgreement * std::max(1.0, r.tau_sq_moments)) {
    r.warnings.push_back("torsion differs between moments and geometric paths");
  }
  if (r.raw_tau_sq_moments < -kNegativeRounding) {
    r.warnings.push_back("negative torsion beyond rounding: Pearson inequality violated numerically");
  }

  r.frame_present = binormal_unit(problem, 0.0).has_value();

  if (options.oracle) {
    const std::vector<double> grid = options.dt_grid.empty() ? default_dt_grid(problem) : options.dt_grid;
    const FitResult kf = lt_curvature(problem, grid, options.gamma);
    const FitResult tf = lt_torsion(problem, grid);
    r.oracle = OracleSummary{kf.normalized, tf.normalized, kf.residual, tf.residual, grid};
    for (const auto& w : kf.warnings) r.warnings.push_back(w);
    for (const auto& w : tf.warnings) {
      if (std::find(r.warnings.begin(), r.warnings.end(), w) == r.warnings.end()) r.warnings.push_back(w);
    }
  }
  return r;
}

std::string report_to_json(const GeometryReport& r) {
  nlohmann::ordered_json j;
  j["hbar"] = 1;
  j["dimension"] = r.dimension;
  j["energy"] = r.energy;
  j["speed"] = r.speed;
  j["kappa_sq_moments"] = r.kappa_sq_moments;
  j["kappa_sq_geometric"] = r.kappa_sq_geometric;
  j["tau_sq_moments"] = r.tau_sq_moments;
  j["tau_sq_geometric"] = r.tau_sq_geometric;
  j["alpha3"] = r.alpha3;
  j["alpha4"] = r.alpha4;
  j["pearson_gap"] = r.pearson_gap;
  j["frame_present"] = r.frame_present;
  j["gamma"] = r.gamma;
  if (r.oracle) {
    j["oracle"] = {
        {"kappa_lt_normalized", r.oracle->kappa_lt_normalized},
        {"tau_lt_normalized", r.oracle->tau_lt_normalized},
        {"fit_residuals", {{"kappa", r.oracle->kappa_fit_residual}, {"tau", r.oracle->tau_fit_residual}}},
        {"dt_grid", r.oracle->dt_grid},
    };
  } else {
    j["oracle"] = nullptr;
  }
  j["diagnostics"] = {
      {"tau_sq_moments_unclamped", r.raw_tau_sq_moments},
      {"s_samples", r.s_samples},
      {"kappa_sq_spread", r.kappa_sq_spread},
      {"tau_sq_spread", r.tau_sq_spread},
  };
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace qcurve
