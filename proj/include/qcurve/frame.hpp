#pragma once

// Geometric path: covariant derivatives through projectors, the quantum frame
// {|Psi>, |T>, |N>, ...} and its Cartan (connection) matrix.

#include <optional>

#include "qcurve/evolution.hpp"

namespace qcurve {

/// ||N_raw|| above which a normalized |N> is emitted.
inline constexpr double kBinormalThreshold = 1e-8;
/// Canonical completion seeds with a residual below this are skipped.
inline constexpr double kCompletionSkipThreshold = 1e-6;

using CartanMatrix = Eigen::Matrix3cd;

/// How d|N>/ds enters the Cartan matrix. d|Psi>/ds = |T> and
/// d|T>/ds = -(dh)^2|Psi> are always analytic.
enum class BinormalDerivative {
  /// Five-point central difference with step 1e-4.
  FiniteDifference,
  /// Closed form from the stationary recursion of the raw binormal.
  Analytic,
};

struct QuantumFrame {
  double s = 0.0;
  StateVector psi;
  StateVector tangent;
  ComplexVector binormal_raw;
  std::optional<StateVector> binormal;
  std::vector<StateVector> extra;
  double kappa_sq = 0.0;
  double tau_sq = 0.0;
  CartanMatrix cartan = CartanMatrix::Zero();

  /// psi, tangent, binormal (if present) and the completion vectors, in order.
  std::vector<ComplexVector> vectors() const;
};

/// kappa^2 = || P_Psi |T'> ||^2
double curvature_geometric(const EvolutionProblem& problem, double s);

/// |N_raw> = P_T P_Psi |T'>
ComplexVector binormal_raw(const EvolutionProblem& problem, double s);

/// tau^2 = <N_raw|N_raw>
double torsion_geometric(const EvolutionProblem& problem, double s);

/// Frame at s. Without a seed the basis is completed with canonical vectors in
/// index order, skipping those (nearly) inside the current span. A supplied
/// seed must be independent of the frame, else DependenceError.
QuantumFrame build_frame(const EvolutionProblem& problem, double s,
                         std::optional<std::span<const ComplexVector>> completion_seed = std::nullopt,
                         BinormalDerivative method = BinormalDerivative::FiniteDifference);

/// M_ij = <e_j | d e_i/ds> over {Psi, T, N}. Without a binormal the 2x2 block
/// is returned padded with zeros.
CartanMatrix cartan_matrix(const EvolutionProblem& problem, double s,
                           BinormalDerivative method = BinormalDerivative::FiniteDifference);

/// Normalized |N(s)>, or nullopt when ||N_raw|| <= 1e-8.
std::optional<ComplexVector> binormal_unit(const EvolutionProblem& problem, double s);

/// d|N>/ds by the requested method; nullopt when no binormal exists.
std::optional<ComplexVector> binormal_derivative(const EvolutionProblem& problem, double s,
                                                 BinormalDerivative method);

}  // namespace qcurve
