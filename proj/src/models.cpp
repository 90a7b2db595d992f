#include "qcurve/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcurve::models {

namespace {

constexpr double kEigenstateGap = 1e-12;

double sq(double x) { return x * x; }

}  // namespace

BlochVector::BlochVector(const Eigen::Vector3d& v) : a(v) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-12) {
    throw InvariantError("Bloch vector of a pure state must have unit length");
  }
}

BlochVector BlochVector::spherical(double theta, double phi) {
  Eigen::Vector3d v(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
  return BlochVector(v.normalized());
}

StateVector bloch_to_state(const BlochVector& a) {
  const double theta = std::acos(std::clamp(a.a.z(), -1.0, 1.0));
  const double phi = std::atan2(a.a.y(), a.a.x());
  return StateVector::normalized(
      (ComplexVector(2) << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)).finished());
}

BlochVector state_to_bloch(const StateVector& psi) {
  if (psi.dim() != 2) throw DimensionError("Bloch vectors are defined for qubits only");
  const Complex c0 = psi[0], c1 = psi[1];
  const Complex cross = std::conj(c0) * c1;
  Eigen::Vector3d v(2.0 * cross.real(), 2.0 * cross.imag(), std::norm(c0) - std::norm(c1));
  return BlochVector(v.normalized());
}

double curvature_bloch(const BlochVector& a, const MagneticVector& m) {
  const double am = a.a.dot(m.m);
  const double gap = m.m.squaredNorm() - am * am;
  if (!(gap > kEigenstateGap)) throw DegenerateError("Bloch vector parallel to the field: eigenstate");
  return 4.0 * am * am / gap;
}

double torsion_bloch(const BlochVector& a, const MagneticVector& m) {
  (void)curvature_bloch(a, m);
  return 0.0;
}

double geodesic_efficiency(const EvolutionProblem& problem, double t) {
  problem.require_moving();
  if (!(t > 0.0)) throw InvariantError("efficiency needs t > 0");
  const StateVector a = evolve(problem, 0.0);
  const StateVector b = evolve(problem, t);
  // arccos|<A|B>| evaluated as atan2(||P_A B||, |<A|B>|), accurate near 0.
  const double overlap = std::abs(a.inner(b));
  const double perp = project_out(a.vec(), b.vec()).norm();
  const double angle = std::atan2(perp, overlap);
  return angle / (problem.speed() * t);
}

StateVector bell(Bell kind) {
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexVector v = ComplexVector::Zero(4);
  switch (kind) {
    case Bell::PhiPlus: v(0) = r; v(3) = r; break;
    case Bell::PhiMinus: v(0) = r; v(3) = -r; break;
    case Bell::PsiPlus: v(1) = r; v(2) = r; break;
    case Bell::PsiMinus: v(1) = r; v(2) = -r; break;
  }
  return StateVector::normalized(v);
}

StateVector ghz() {
  ComplexVector v = ComplexVector::Zero(8);
  v(0) = v(7) = 1.0 / std::numbers::sqrt2;
  return StateVector::normalized(v);
}

StateVector w() {
  ComplexVector v = ComplexVector::Zero(8);
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return StateVector::normalized(v);
}

StateVector xi_family(double xi, double phi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw InvariantError("xi must lie in [0, 1]");
  return StateVector::normalized(
      (ComplexVector(2) << xi, std::polar(std::sqrt(1.0 - xi * xi), phi)).finished());
}

StateVector basis_state(std::string_view bits) {
  if (bits.empty() || bits.size() > 12) throw InvariantError("basis label must have 1 to 12 bits");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvariantError("basis label must contain only 0 and 1");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return StateVector::basis(std::size_t{1} << bits.size(), index);
}

HermitianOperator single_qubit(const MagneticVector& m) {
  return build_operator({{m.m0, "I"}, {m.m.x(), "X"}, {m.m.y(), "Y"}, {m.m.z(), "Z"}}, 1);
}

HermitianOperator two_qubit_nonlocal(double m1, double m2, double m3, double m4) {
  return build_operator({{m1, "XX"}, {m2, "ZZ"}, {m3, "XZ"}, {m4, "ZX"}}, 2);
}

HermitianOperator two_qubit_local(double m1, double m2, double m3, double m4) {
  return build_operator({{m1, "IX"}, {m2, "XI"}, {m3, "IZ"}, {m4, "ZI"}}, 2);
}

HermitianOperator heisenberg3(double jx, double jy, double jz, double h) {
  return build_operator({{jx, "XXI"}, {jx, "XIX"}, {jx, "IXX"},
                         {jy, "YYI"}, {jy, "YIY"}, {jy, "IYY"},
                         {jz, "ZZI"}, {jz, "ZIZ"}, {jz, "IZZ"},
                         {h, "ZII"},  {h, "IZI"},  {h, "IIZ"}},
                        3);
}

Coefficients nonlocal_separable(double m1, double m2, double m3, double m4) {
  const double den = sq(m1) + sq(m3) + sq(m4);
  if (!(den > 0.0)) throw DegenerateError("m1 = m3 = m4 = 0: |00> is stationary");
  return {4.0 * (sq(m2) * sq(m3) + sq(m2) * sq(m4) + sq(m3) * sq(m4)) / sq(den),
          4.0 * (sq(m3) + sq(m4)) * sq(m1 * m2 - m3 * m4) / (den * den * den)};
}

Coefficients local_bell(double m1, double m2, double m3, double m4) {
  const double den = sq(m1 + m2) + sq(m3 + m4);
  if (!(den > 0.0)) throw DegenerateError("m1 + m2 = m3 + m4 = 0: |Phi+> is stationary");
  const double k = 4.0 * sq(m1 * m4 - m2 * m3) / sq(den);
  return {k, k};
}

Coefficients local_separable(double m1, double m2, double m3, double m4) {
  const double den = sq(m1) + sq(m2);
  if (!(den > 0.0)) throw DegenerateError("m1 = m2 = 0: |00> is stationary");
  return {4.0 * (sq(m1) * sq(m2) + sq(m1) * sq(m3) + sq(m2) * sq(m4)) / sq(den),
          4.0 * sq(m1) * sq(m2) * (den + sq(m3 - m4)) / (den * den * den)};
}

Coefficients nonlocal_bell(double m1, double m2, double m3, double m4) {
  if (m3 == m4) throw DegenerateError("m3 = m4: |Phi+> is stationary");
  return {4.0 * sq((m1 + m2) / (m3 - m4)), 0.0};
}

Coefficients ghz_heisenberg(double jx, double jy, double jz, double h) {
  const double a = sq(jx - jy);
  const double b = sq(jx + jy - 2.0 * jz);
  const double den = 3.0 * sq(h) + a;
  if (a == 0.0) return {0.0, 0.0};
  const double k = (4.0 / 3.0) * a * (sq(h) + b) / sq(den);
  return {k, k - (4.0 / 3.0) * sq(a) * b / (den * den * den)};
}

Coefficients w_heisenberg(double jx, double jy, double jz, double h) {
  if (jx == jy) throw DegenerateError("jx = jy: W is stationary");
  return {(4.0 / 3.0) * sq(2.0 * h + jx + jy - 2.0 * jz) / sq(jx - jy), 0.0};
}

double xi_curvature(double xi) {
  const double x2 = xi * xi;
  return sq(1.0 - 2.0 * x2) / (x2 * (1.0 - x2));
}

double xi_kurtosis(double xi) {
  const double x2 = xi * xi;
  return (1.0 - 3.0 * x2 + 3.0 * x2 * x2) / (x2 * (1.0 - x2));
}

double xi_efficiency(double xi, double omega_t) {
  const double c = std::cos(omega_t), s = std::sin(omega_t);
  const double z = 2.0 * xi * xi - 1.0;
  return std::acos(std::sqrt(c * c + z * z * s * s)) / (2.0 * xi * std::sqrt(1.0 - xi * xi) * omega_t);
}

double xi_efficiency_quarter_period(double xi) {
  const double x2 = xi * xi;
  return (2.0 / std::numbers::pi) * std::acos(std::sqrt(2.0 * x2 * x2 - 2.0 * x2 + 1.0)) /
         (xi * std::sqrt(1.0 - x2));
}

}  // namespace qcurve::models
