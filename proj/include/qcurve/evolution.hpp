#pragma once

// Stationary Schrodinger evolution (hbar = 1), parallel transport and the
// arc-length parametrized curve |Psi(s)> with its analytic derivatives.

#include "qcurve/hilbert.hpp"
#include "qcurve/moments.hpp"

namespace qcurve {

/// Step used by every finite-difference self-check on s.
inline constexpr double kFiniteDifferenceStep = 1e-4;

/// U(t) = exp(-i H t) via the Hermitian eigendecomposition of H.
ComplexMatrix propagator(const HermitianOperator& h, double t);

/// H, |psi0> and everything derived once: <H>, moments, speed, and the
/// eigendecomposition used for exact evaluation at any t. Immutable.
class EvolutionProblem {
 public:
  EvolutionProblem(HermitianOperator hamiltonian, StateVector initial_state);

  const HermitianOperator& hamiltonian() const noexcept { return h_; }
  const StateVector& initial_state() const noexcept { return psi0_; }
  std::size_t dim() const noexcept { return psi0_.dim(); }

  double energy() const noexcept { return moments_.mean; }
  /// v = sqrt(<(dH)^2>) (hbar = 1).
  double speed() const noexcept { return moments_.speed(); }
  const MomentSet& moments() const noexcept { return moments_; }
  bool stationary() const noexcept { return !moments_.defined(); }

  /// Throws StationaryStateError if the initial state is an H-eigenstate.
  void require_moving() const;

  const Eigen::VectorXd& eigenvalues() const noexcept { return evals_; }
  const ComplexMatrix& eigenvectors() const noexcept { return evecs_; }

  /// Eigenbasis state with every amplitude multiplied by exp(-i (E_k - offset) t).
  ComplexVector phase_evolved(double t, double offset) const;

 private:
  HermitianOperator h_;
  StateVector psi0_;
  MomentSet moments_;
  Eigen::VectorXd evals_;
  ComplexMatrix evecs_;
  ComplexVector coeffs_;  // V^dagger psi0
};

/// |psi(t)> = exp(-i H t)|psi0>
StateVector evolve(const EvolutionProblem& problem, double t);

/// |Psi(t)> = exp(i E t)|psi(t)>, the parallel-transported lift with
/// <Psi|dPsi/dt> = 0.
StateVector parallel_transported_state(const EvolutionProblem& problem, double t);

/// |Psi(s)> at arc length s = v t.
StateVector state_at_arclength(const EvolutionProblem& problem, double s);

/// |T(s)> = -i dh |Psi(s)>, dh = (H - E)/v.
StateVector tangent(const EvolutionProblem& problem, double s);

/// |T'(s)> = -(dh)^2 |Psi(s)>; not unit in general.
ComplexVector tangent_derivative(const EvolutionProblem& problem, double s);

/// (dh)^k |Psi(s)> for k = 0..order, by repeated application.
std::vector<ComplexVector> normalized_powers(const EvolutionProblem& problem, double s, int order);

}  // namespace qcurve
