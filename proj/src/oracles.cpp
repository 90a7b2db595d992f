#include "qcurve/oracles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qcurve {

double fubini_study_sq(const StateVector& psi1, const StateVector& psi2, double gamma) {
  if (psi1.dim() != psi2.dim()) {
    throw DimensionError("fubini_study_sq: dimensions " + std::to_string(psi1.dim()) + " and " +
                         std::to_string(psi2.dim()));
  }
  if (!(gamma > 0.0)) throw InvariantError("gamma must be positive");
  const double perp = project_out(psi1.vec(), psi2.vec()).squaredNorm();
  return gamma * gamma * std::clamp(perp, 0.0, 1.0);
}

StateVector geodesic_interpolate(const StateVector& psi_i, const StateVector& psi_f, double xi) {
  if (psi_i.dim() != psi_f.dim()) throw DimensionError("geodesic_interpolate: dimension mismatch");
  if (!(xi >= 0.0 && xi <= 1.0)) throw InvariantError("geodesic parameter must lie in [0, 1]");
  const Complex overlap = psi_f.inner(psi_i);
  const double mag = std::abs(overlap);
  if (mag <= 1e-10) throw DegenerateError("geodesic undefined between orthogonal endpoints");
  if (xi == 0.0) return psi_i;
  const Complex phase = overlap / mag;
  return StateVector::normalized((1.0 - xi) * psi_i.vec() + xi * phase * psi_f.vec());
}

std::vector<double> default_dt_grid(const EvolutionProblem& problem) {
  problem.require_moving();
  const double v = problem.speed();
  return {1e-3 / v, 2e-3 / v, 4e-3 / v};
}

double minimal_geodesic_distance_sq(const EvolutionProblem& problem, double dt, double gamma) {
  const StateVector a = evolve(problem, 0.0);
  const StateVector mid = evolve(problem, dt);
  const StateVector end = evolve(problem, 2.0 * dt);
  const auto d2 = [&](double xi) { return fubini_study_sq(geodesic_interpolate(a, end, xi), mid, gamma); };
  return golden_section_minimize(d2, 0.0, 1.0, 1e-10).value;
}

double out_of_plane_weight(const EvolutionProblem& problem, double dt) {
  const StateVector a = evolve(problem, 0.0);
  const StateVector b = evolve(problem, dt);
  const StateVector c = evolve(problem, 2.0 * dt);
  std::vector<ComplexVector> plane{a.vec()};
  const ComplexVector r = orthogonal_residual(plane, b.vec());
  const double rn = r.norm();
  if (rn < kIndependenceThreshold) throw DegenerateError("plane of evolution is degenerate at this step");
  plane.push_back(r / rn);
  // 1 - p is the squared norm of the component outside the plane.
  return orthogonal_residual(plane, c.vec()).squaredNorm();
}

namespace {

void check_grid(const EvolutionProblem& problem, std::span<const double> dt_grid, FitResult& out) {
  problem.require_moving();
  if (dt_grid.empty()) throw InvariantError("dt grid is empty");
  double prev = 0.0;
  for (double dt : dt_grid) {
    if (!(dt > prev)) throw InvariantError("dt grid must be strictly increasing and positive");
    prev = dt;
  }
  const double v = problem.speed();
  if (dt_grid.back() * v > 0.1) {
    std::ostringstream msg;
    msg << "largest step has dt*v = " << dt_grid.back() * v << " > 0.1; Taylor regime not reached";
    out.warnings.push_back(msg.str());
  }
  out.dt_grid.assign(dt_grid.begin(), dt_grid.end());
}

// Least squares y = C x^4 through the origin.
void fit_quartic(const EvolutionProblem& problem, FitResult& out, double scale) {
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < out.dt_grid.size(); ++k) {
    const double x = std::pow(out.dt_grid[k], 4);
    sxy += x * out.samples[k];
    sxx += x * x;
    syy += out.samples[k] * out.samples[k];
  }
  const double c = sxy / sxx;
  double res = 0.0;
  for (std::size_t k = 0; k < out.dt_grid.size(); ++k) {
    const double e = out.samples[k] - c * std::pow(out.dt_grid[k], 4);
    res += e * e;
  }
  const double mu2 = problem.moments().mu2;
  // Below a normalized coefficient of 1e-14 the samples are rounding noise.
  const double floor = 1e-14 * std::sqrt(sxx) * mu2 * mu2 * scale;
  out.coefficient = c / scale;
  out.normalized = out.coefficient / (mu2 * mu2);
  out.residual = std::sqrt(res) / std::max(std::sqrt(syy), floor);
  if (out.residual > kMaxFitResidual) {
    std::ostringstream msg;
    msg << "Delta t^4 fit residual " << out.residual << " exceeds " << kMaxFitResidual;
    throw DegenerateError(msg.str());
  }
}

}  // namespace

FitResult lt_curvature(const EvolutionProblem& problem, std::span<const double> dt_grid, double gamma) {
  FitResult out;
  check_grid(problem, dt_grid, out);
  for (double dt : out.dt_grid) out.samples.push_back(minimal_geodesic_distance_sq(problem, dt, gamma));
  // d^2_min = kappa_LT (gamma^2 / 4) dt^4
  fit_quartic(problem, out, gamma * gamma / 4.0);
  return out;
}

FitResult lt_torsion(const EvolutionProblem& problem, std::span<const double> dt_grid) {
  FitResult out;
  check_grid(problem, dt_grid, out);
  for (double dt : out.dt_grid) out.samples.push_back(out_of_plane_weight(problem, dt));
  fit_quartic(problem, out, 1.0);
  return out;
}

void SpaceCurveSamples::validate() const {
  if (points.size() < 5) throw InvariantError("space curve needs at least 5 samples");
  if (parameter.size() != points.size()) throw DimensionError("one parameter value per sample point required");
  for (std::size_t k = 1; k < parameter.size(); ++k) {
    if (!(parameter[k] > parameter[k - 1])) throw InvariantError("curve parameter must be strictly increasing");
  }
}

namespace {

// First three derivatives at u = 0 of the quartic through (u_k, f_k), k = 0..4.
std::array<Vec3, 3> local_derivatives(const std::array<double, 5>& u, const std::array<Vec3, 5>& f) {
  Eigen::Matrix<double, 5, 5> vander;
  for (int r = 0; r < 5; ++r) {
    double p = 1.0;
    for (int c = 0; c < 5; ++c) {
      vander(r, c) = p;
      p *= u[r];
    }
  }
  Eigen::Matrix<double, 5, 3> rhs;
  for (int r = 0; r < 5; ++r) rhs.row(r) = f[r].transpose();
  const Eigen::Matrix<double, 5, 3> coef = vander.partialPivLu().solve(rhs);
  return {Vec3(coef.row(1).transpose()), Vec3(2.0 * coef.row(2).transpose()), Vec3(6.0 * coef.row(3).transpose())};
}

}  // namespace

ClassicalFrenetSerret classical_fs(const SpaceCurveSamples& samples) {
  samples.validate();
  ClassicalFrenetSerret out;
  const std::size_t n = samples.points.size();
  for (std::size_t i = 2; i + 2 < n; ++i) {
    std::array<double, 5> u{};
    std::array<Vec3, 5> f;
    const double center = samples.parameter[i];
    // Scale local coordinates to O(1) to keep the Vandermonde well conditioned.
    const double h = 0.5 * (samples.parameter[i + 2] - samples.parameter[i - 2]);
    for (int k = 0; k < 5; ++k) {
      u[k] = (samples.parameter[i - 2 + k] - center) / h;
      f[k] = samples.points[i - 2 + k];
    }
    auto d = local_derivatives(u, f);
    const Vec3 r1 = d[0] / h;
    const Vec3 r2 = d[1] / (h * h);
    const Vec3 r3 = d[2] / (h * h * h);
    const Vec3 cross = r1.cross(r2);
    const double cn = cross.norm();
    out.parameter.push_back(center);
    out.kappa.push_back(cn / std::pow(r1.norm(), 3));
    if (cn < 1e-12) {
      out.tau.emplace_back(std::nullopt);
    } else {
      out.tau.emplace_back(cross.dot(r3) / (cn * cn));
    }
  }
  return out;
}

double sphere_geodesic_curvature(double theta, double radius) {
  if (!(radius > 0.0)) throw InvariantError("sphere radius must be positive");
  const double st = std::sin(theta);
  if (!(theta > 0.0 && theta < std::numbers::pi) || std::abs(st) <= 1e-10) {
    throw DegenerateError("geodesic curvature undefined at the poles");
  }
  return std::cos(theta) / (st * radius);
}

}  // namespace qcurve
