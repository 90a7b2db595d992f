#include "qcurve/evolution.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qcurve/kernels.hpp"

namespace qcurve {

namespace {

struct Spectrum {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};

Spectrum diagonalize(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigendecomposition failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

void check_time(double t) {
  if (!std::isfinite(t)) throw InvariantError("evolution time must be finite");
}

}  // namespace

ComplexMatrix propagator(const HermitianOperator& h, double t) {
  check_time(t);
  const Spectrum sp = diagonalize(h);
  ComplexVector phases(sp.values.size());
  for (Eigen::Index k = 0; k < sp.values.size(); ++k) {
    phases(k) = std::polar(1.0, -sp.values(k) * t);
  }
  return sp.vectors * phases.asDiagonal() * sp.vectors.adjoint();
}

EvolutionProblem::EvolutionProblem(HermitianOperator hamiltonian, StateVector initial_state)
    : h_(std::move(hamiltonian)), psi0_(std::move(initial_state)) {
  if (h_.dim() != psi0_.dim()) {
    throw DimensionError("Hamiltonian dimension " + std::to_string(h_.dim()) +
                         " does not match state dimension " + std::to_string(psi0_.dim()));
  }
  moments_ = central_moments(h_, psi0_);
  Spectrum sp = diagonalize(h_);
  evals_ = std::move(sp.values);
  evecs_ = std::move(sp.vectors);
  coeffs_ = evecs_.adjoint() * psi0_.vec();
}

void EvolutionProblem::require_moving() const {
  if (stationary()) throw StationaryStateError();
}

ComplexVector EvolutionProblem::phase_evolved(double t, double offset) const {
  check_time(t);
  ComplexVector c(coeffs_.size());
  for (Eigen::Index k = 0; k < coeffs_.size(); ++k) {
    c(k) = coeffs_(k) * std::polar(1.0, -(evals_(k) - offset) * t);
  }
  return evecs_ * c;
}

StateVector evolve(const EvolutionProblem& problem, double t) {
  return StateVector::normalized(problem.phase_evolved(t, 0.0));
}

StateVector parallel_transported_state(const EvolutionProblem& problem, double t) {
  return StateVector::normalized(problem.phase_evolved(t, problem.energy()));
}

StateVector state_at_arclength(const EvolutionProblem& problem, double s) {
  problem.require_moving();
  return parallel_transported_state(problem, s / problem.speed());
}

std::vector<ComplexVector> normalized_powers(const EvolutionProblem& problem, double s, int order) {
  problem.require_moving();
  const double v = problem.speed();
  const double e = problem.energy();
  const ComplexMatrix& h = problem.hamiltonian().matrix();
  std::vector<ComplexVector> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  out.push_back(state_at_arclength(problem, s).vec());
  for (int k = 1; k <= order; ++k) {
    out.push_back(kernels::apply_shifted(h, e, out.back()) / v);
  }
  return out;
}

StateVector tangent(const EvolutionProblem& problem, double s) {
  const auto p = normalized_powers(problem, s, 1);
  const Complex minus_i{0.0, -1.0};
  return StateVector::normalized(minus_i * p[1]);
}

ComplexVector tangent_derivative(const EvolutionProblem& problem, double s) {
  const auto p = normalized_powers(problem, s, 2);
  return -p[2];
}

}  // namespace qcurve
