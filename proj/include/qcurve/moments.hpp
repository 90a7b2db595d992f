#pragma once

// Statistical path: central moments of H in a state and the curvature,
// torsion, skewness and kurtosis built from them.

#include "qcurve/hilbert.hpp"

namespace qcurve {

/// Relative threshold on mu2 (against the squared Frobenius norm of the
/// traceless part of H) below which the state counts as an eigenstate.
inline constexpr double kVarianceThreshold = 1e-10;
/// Absolute floor on the speed sqrt(mu2).
inline constexpr double kSpeedThreshold = 1e-10;
/// Tolerance for negative-by-rounding torsion and Pearson gap.
inline constexpr double kNegativeRounding = 1e-9;

struct MomentSet {
  double mean = 0.0;  ///< <H>
  double mu2 = 0.0;   ///< <(dH)^2>
  double mu3 = 0.0;   ///< <(dH)^3>
  double mu4 = 0.0;   ///< <(dH)^4>
  double scale = 0.0; ///< ||H - tr(H)/d||_F^2, reference for the eigenstate test

  /// False when the state is (numerically) an H-eigenstate.
  bool defined() const noexcept;

  /// mu3 / mu2^{3/2}; throws StationaryStateError when undefined.
  double alpha3() const;
  /// mu4 / mu2^2; throws StationaryStateError when undefined.
  double alpha4() const;
  double speed() const noexcept;
};

/// mu_r = <(H - <H>)^r> by repeated application of the shifted operator.
MomentSet central_moments(const HermitianOperator& h, const StateVector& state);

/// kappa^2 = alpha4 - 1
double curvature_from_moments(const MomentSet& m);
/// tau^2 = alpha4 - 1 - alpha3^2, unclamped.
double torsion_from_moments(const MomentSet& m);
/// alpha4 - alpha3^2 - 1 (Pearson); numerically identical to the torsion.
double pearson_gap(const MomentSet& m);

/// Values in [-1e-9, 0) become 0; anything else is returned unchanged.
double clamp_rounding(double value);

}  // namespace qcurve
