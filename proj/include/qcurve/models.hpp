#pragma once

// Hamiltonian and state families, qubit Bloch-sphere reductions, geodesic
// efficiency, and closed-form curvature/torsion references for the one-,
// two- and three-qubit models.

#include <array>
#include <string_view>

#include "qcurve/evolution.hpp"

namespace qcurve::models {

struct BlochVector {
  Eigen::Vector3d a;

  /// Throws InvariantError unless ||a|| = 1 within 1e-12.
  explicit BlochVector(const Eigen::Vector3d& v);
  static BlochVector spherical(double theta, double phi);
};

struct MagneticVector {
  Eigen::Vector3d m = Eigen::Vector3d::Zero();
  double m0 = 0.0;
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> for a = (sin cos, sin sin, cos).
StateVector bloch_to_state(const BlochVector& a);
/// (<X>, <Y>, <Z>); throws DimensionError for d != 2.
BlochVector state_to_bloch(const StateVector& psi);

/// 4 (a.m)^2 / (m^2 - (a.m)^2). Throws DegenerateError for a parallel to m.
double curvature_bloch(const BlochVector& a, const MagneticVector& m);
/// Identically zero for single-qubit Hamiltonians; validates the same
/// preconditions as curvature_bloch.
double torsion_bloch(const BlochVector& a, const MagneticVector& m);

/// arccos|<psi(0)|psi(t)>| / (v t). For stationary H the path length is v t.
double geodesic_efficiency(const EvolutionProblem& problem, double t);

// --- states -----------------------------------------------------------------

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

StateVector bell(Bell kind);
StateVector ghz();
StateVector w();
/// xi|0> + e^{i phi} sqrt(1 - xi^2)|1>, xi in [0, 1].
StateVector xi_family(double xi, double phi = 0.0);
/// Computational basis state from a bit string such as "01".
StateVector basis_state(std::string_view bits);

// --- Hamiltonians -----------------------------------------------------------

/// m0 I + m . sigma
HermitianOperator single_qubit(const MagneticVector& m);
/// m1 XX + m2 ZZ + m3 XZ + m4 ZX
HermitianOperator two_qubit_nonlocal(double m1, double m2, double m3, double m4);
/// m1 IX + m2 XI + m3 IZ + m4 ZI
HermitianOperator two_qubit_local(double m1, double m2, double m3, double m4);
/// All-pairs XYZ couplings plus a uniform Z field on three qubits.
HermitianOperator heisenberg3(double jx, double jy, double jz, double h);

// --- closed forms -----------------------------------------------------------

struct Coefficients {
  double kappa_sq = 0.0;
  double tau_sq = 0.0;
};

/// |00> under two_qubit_nonlocal.
Coefficients nonlocal_separable(double m1, double m2, double m3, double m4);
/// |Phi+> under two_qubit_local (curvature equals torsion).
Coefficients local_bell(double m1, double m2, double m3, double m4);
/// |00> under two_qubit_local.
Coefficients local_separable(double m1, double m2, double m3, double m4);
/// |Phi+> under two_qubit_nonlocal.
Coefficients nonlocal_bell(double m1, double m2, double m3, double m4);
/// GHZ under heisenberg3; (0, 0) at the removable singularity jx = jy, h = 0.
Coefficients ghz_heisenberg(double jx, double jy, double jz, double h);
/// W under heisenberg3; DegenerateError for jx = jy.
Coefficients w_heisenberg(double jx, double jy, double jz, double h);

/// (1 - 2 xi^2)^2 / (xi^2 (1 - xi^2)) for H ~ sigma_z on xi_family(xi).
double xi_curvature(double xi);
/// (1 - 3 xi^2 + 3 xi^4) / (xi^2 (1 - xi^2)), the kurtosis of the same family.
double xi_kurtosis(double xi);
/// Efficiency of the xi family under m sigma_z after time t (omega t = m t).
double xi_efficiency(double xi, double omega_t);
/// xi_efficiency at omega t = pi / 4.
double xi_efficiency_quarter_period(double xi);

}  // namespace qcurve::models
