#pragma once

// Dense complex linear algebra on finite-dimensional Hilbert spaces: unit
// state vectors, Hermitian operators, Pauli-word Hamiltonians, projectors and
// Gram-Schmidt.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcurve/errors.hpp"

namespace qcurve {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kIndependenceThreshold = 1e-10;

/// Unit-norm pure state. The dimension is fixed at construction.
class StateVector {
 public:
  /// Throws InvariantError unless | ||v||^2 - 1 | <= 1e-12 and dim >= 2.
  explicit StateVector(ComplexVector amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  /// Normalizes `v` first. Throws InvariantError for a (near) zero vector.
  static StateVector normalized(const ComplexVector& v);

  /// |index> in dimension `dim`.
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& vec() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  /// <this|other>
  Complex inner(const StateVector& other) const;

  StateVector with_phase(double chi) const;

 private:
  ComplexVector amps_;
};

/// d x d complex matrix equal to its conjugate transpose. Non-Hermitian input
/// is rejected, never symmetrized.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix entries);

  static HermitianOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  HermitianOperator shifted(double c) const;
  HermitianOperator scaled(double lambda) const;

  /// Squared Frobenius norm of the traceless part H - (tr H / d) I.
  double traceless_norm_sq() const;

 private:
  ComplexMatrix m_;
};

/// coefficient * (tensor product of Pauli matrices spelled by `word`).
/// Leftmost character acts on qubit 1, the most significant index bit.
struct PauliTerm {
  double coefficient = 0.0;
  std::string word;
};

HermitianOperator build_operator(std::span<const PauliTerm> terms, std::size_t n_qubits);
HermitianOperator build_operator(std::initializer_list<PauliTerm> terms, std::size_t n_qubits);

/// Re <psi|M|psi>. Throws InvariantError if the imaginary residual exceeds
/// 1e-12 relative to the operator scale.
double expectation(const HermitianOperator& op, const StateVector& state);

/// I - |psi><psi|
HermitianOperator projector_orthogonal(const StateVector& state);

/// x - |u><u|x> for unit u, without forming the projector.
ComplexVector project_out(const ComplexVector& unit, const ComplexVector& x);

/// Classical Gram-Schmidt with one re-orthogonalization pass. Throws
/// DependenceError naming the first vector whose residual norm is below
/// 1e-10.
std::vector<ComplexVector> gram_schmidt(std::span<const ComplexVector> vectors);

/// Orthogonalizes `v` against the orthonormal set `basis` (two passes) and
/// returns the residual, unnormalized.
ComplexVector orthogonal_residual(std::span<const ComplexVector> basis, const ComplexVector& v);

}  // namespace qcurve
