#pragma once

// Independent numerical oracles: finite-difference curvature and torsion from
// Fubini-Study distances and plane projections, plus classical Frenet-Serret
// references for sampled space curves.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "qcurve/evolution.hpp"

namespace qcurve {

inline constexpr double kDefaultGamma = 2.0;
/// Fits whose relative residual exceeds this are rejected.
inline constexpr double kMaxFitResidual = 0.05;

/// gamma^2 (1 - |<psi1|psi2>|^2), evaluated as gamma^2 ||P_psi1 psi2||^2 to
/// avoid cancellation for nearby states.
double fubini_study_sq(const StateVector& psi1, const StateVector& psi2, double gamma = kDefaultGamma);

/// Normalized blend (1 - xi)|psi_i> + xi e^{i arg<psi_f|psi_i>} |psi_f>.
/// Throws DegenerateError for orthogonal endpoints.
StateVector geodesic_interpolate(const StateVector& psi_i, const StateVector& psi_f, double xi);

/// Golden-section minimization on [lo, hi], seeded by a uniform coarse scan.
struct ScalarMinimum {
  double x;
  double value;
};
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tol, int coarse_points = 64);

struct FitResult {
  /// Leading Delta t^4 coefficient (kappa_LT or tau_LT, hbar = 1).
  double coefficient = 0.0;
  /// coefficient / mu2^2; approaches kappa^2 or tau^2.
  double normalized = 0.0;
  /// ||y - C x|| / ||y|| for the fit through the origin.
  double residual = 0.0;
  std::vector<double> dt_grid;
  /// Raw values that were fitted (d^2_min or 1 - p_plane), one per step.
  std::vector<double> samples;
  std::vector<std::string> warnings;
};

/// Default step grid {1, 2, 4} x 1e-3 / v.
std::vector<double> default_dt_grid(const EvolutionProblem& problem);

/// Minimal squared distance between psi(dt) and the geodesic joining psi(0)
/// and psi(2 dt).
double minimal_geodesic_distance_sq(const EvolutionProblem& problem, double dt, double gamma = kDefaultGamma);

/// 1 - <psi(2 dt)|P_plane|psi(2 dt)>, plane spanned by psi(0), psi(dt).
double out_of_plane_weight(const EvolutionProblem& problem, double dt);

FitResult lt_curvature(const EvolutionProblem& problem, std::span<const double> dt_grid,
                       double gamma = kDefaultGamma);
FitResult lt_torsion(const EvolutionProblem& problem, std::span<const double> dt_grid);

using Vec3 = Eigen::Vector3d;

struct SpaceCurveSamples {
  std::vector<Vec3> points;
  std::vector<double> parameter;

  /// Checks >= 5 points and strictly increasing parameter.
  void validate() const;
};

struct ClassicalFrenetSerret {
  /// Parameter values of the interior points the estimates belong to.
  std::vector<double> parameter;
  std::vector<double> kappa;
  /// Empty where ||r' x r''|| < 1e-12 (torsion undefined).
  std::vector<std::optional<double>> tau;
};

/// Curvature and torsion at each interior point from five-point local
/// polynomial derivatives. Works for non-uniform spacing.
ClassicalFrenetSerret classical_fs(const SpaceCurveSamples& samples);

/// cot(theta) / R for the circle at polar angle theta on a sphere of radius R.
double sphere_geodesic_curvature(double theta, double radius);

// ---------------------------------------------------------------------------

template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tol, int coarse_points) {
  // Coarse scan picks the bracket around the best grid point.
  const int n = std::max(coarse_points, 3);
  double best_x = lo;
  double best_v = f(lo);
  int best_k = 0;
  for (int k = 1; k < n; ++k) {
    const double x = lo + (hi - lo) * k / (n - 1);
    const double v = f(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
      best_k = k;
    }
  }
  const double step = (hi - lo) / (n - 1);
  double a = std::max(lo, lo + (best_k - 1) * step);
  double b = std::min(hi, lo + (best_k + 1) * step);

  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double v = f(x);
  if (best_v < v) return {best_x, best_v};
  return {x, v};
}

}  // namespace qcurve
