#include "qcurve/moments.hpp"

#include <cmath>

#include "qcurve/kernels.hpp"

namespace qcurve {

bool MomentSet::defined() const noexcept {
  return mu2 > kVarianceThreshold * scale && std::sqrt(std::max(mu2, 0.0)) > kSpeedThreshold;
}

double MomentSet::speed() const noexcept { return std::sqrt(std::max(mu2, 0.0)); }

double MomentSet::alpha3() const {
  if (!defined()) throw StationaryStateError("skewness undefined: state is an eigenstate of H");
  return mu3 / (mu2 * std::sqrt(mu2));
}

double MomentSet::alpha4() const {
  if (!defined()) throw StationaryStateError("kurtosis undefined: state is an eigenstate of H");
  return mu4 / (mu2 * mu2);
}

MomentSet central_moments(const HermitianOperator& h, const StateVector& state) {
  if (h.dim() != state.dim()) {
    throw DimensionError("operator dimension " + std::to_string(h.dim()) + " does not match state dimension " +
                         std::to_string(state.dim()));
  }
  MomentSet m;
  m.mean = expectation(h, state);
  m.scale = h.traceless_norm_sq();

  // v1 = dH psi, v2 = dH^2 psi; mu2 = <v1|v1>, mu3 = <v1|v2>, mu4 = <v2|v2>.
  const ComplexVector v1 = kernels::apply_shifted(h.matrix(), m.mean, state.vec());
  const ComplexVector v2 = kernels::apply_shifted(h.matrix(), m.mean, v1);
  m.mu2 = v1.squaredNorm();
  m.mu3 = v1.dot(v2).real();
  m.mu4 = v2.squaredNorm();
  return m;
}

double curvature_from_moments(const MomentSet& m) {
  if (!m.defined()) throw StationaryStateError("curvature undefined: state is an eigenstate of H");
  return (m.mu4 - m.mu2 * m.mu2) / (m.mu2 * m.mu2);
}

double torsion_from_moments(const MomentSet& m) {
  if (!m.defined()) throw StationaryStateError("torsion undefined: state is an eigenstate of H");
  const double a3 = m.alpha3();
  return curvature_from_moments(m) - a3 * a3;
}

double pearson_gap(const MomentSet& m) {
  const double a3 = m.alpha3();
  return m.alpha4() - a3 * a3 - 1.0;
}

double clamp_rounding(double value) {
  return (value < 0.0 && value >= -kNegativeRounding) ? 0.0 : value;
}

}  // namespace qcurve
