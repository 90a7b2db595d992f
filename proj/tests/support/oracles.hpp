#pragma once

// Test-side reference computations. They deliberately avoid the library's
// own code paths: spectral sums instead of matvecs, a generic matrix
// exponential instead of the cached eigenbasis, finite differences instead of
// the closed-form tangent.

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <functional>

#include "qcurve/evolution.hpp"
#include "qcurve/sampling.hpp"

namespace qcurve::testing {

struct SpectralMoments {
  double mean, mu2, mu3, mu4;
  double kappa_sq() const { return (mu4 - mu2 * mu2) / (mu2 * mu2); }
  double alpha3() const { return mu3 / std::pow(mu2, 1.5); }
  double alpha4() const { return mu4 / (mu2 * mu2); }
  double tau_sq() const { return kappa_sq() - alpha3() * alpha3(); }
};

// Moments as weighted sums over the spectrum: p_i = |<e_i|psi>|^2.
inline SpectralMoments spectral_moments(const ComplexMatrix& h, const ComplexVector& psi) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXd p = (es.eigenvectors().adjoint() * psi).cwiseAbs2();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double mean = p.dot(lam);
  const Eigen::VectorXd d = lam.array() - mean;
  return {mean, p.dot(d.cwiseProduct(d)), p.dot(d.array().cube().matrix()), p.dot(d.array().square().square().matrix())};
}

inline ComplexMatrix expm_propagator(const ComplexMatrix& h, double t) {
  const ComplexMatrix a = Complex(0.0, -t) * h;
  return a.exp();
}

// Fourth-order central difference of a vector-valued function.
inline ComplexVector central_difference(const std::function<ComplexVector(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

// || a - e^{i phi} b || at the best phase.
inline double phase_distance(const ComplexVector& a, const ComplexVector& b) {
  const Complex overlap = b.dot(a);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).norm();
}

inline double relative_gap(double value, double reference, double floor = 1.0) {
  return std::abs(value - reference) / std::max(std::abs(reference), floor);
}

inline EvolutionProblem random_problem(std::size_t dim, sampling::Rng& rng) {
  return EvolutionProblem(sampling::random_hermitian(dim, rng), sampling::random_state(dim, rng));
}

}  // namespace qcurve::testing
