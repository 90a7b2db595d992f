#include "qcurve/frame.hpp"

#include <cmath>

namespace qcurve {

namespace {

const Complex kI{0.0, 1.0};

// Frame ingredients at s from the powers p_k = dh^k |Psi(s)>:
//   T = -i p1,  T' = -p2,  T'' = i p3.
struct LocalCurve {
  ComplexVector psi, t, dt, ddt;
};

LocalCurve local_curve(const EvolutionProblem& problem, double s) {
  const auto p = normalized_powers(problem, s, 3);
  return {p[0], -kI * p[1], -p[2], kI * p[3]};
}

ComplexVector raw_binormal_from(const LocalCurve& c) {
  return project_out(c.t, project_out(c.psi, c.dt));
}

}  // namespace

std::vector<ComplexVector> QuantumFrame::vectors() const {
  std::vector<ComplexVector> out{psi.vec(), tangent.vec()};
  if (binormal) out.push_back(binormal->vec());
  for (const auto& e : extra) out.push_back(e.vec());
  return out;
}

double curvature_geometric(const EvolutionProblem& problem, double s) {
  const auto c = local_curve(problem, s);
  return project_out(c.psi, c.dt).squaredNorm();
}

ComplexVector binormal_raw(const EvolutionProblem& problem, double s) {
  return raw_binormal_from(local_curve(problem, s));
}

double torsion_geometric(const EvolutionProblem& problem, double s) {
  return binormal_raw(problem, s).squaredNorm();
}

std::optional<ComplexVector> binormal_unit(const EvolutionProblem& problem, double s) {
  const ComplexVector raw = binormal_raw(problem, s);
  const double n = raw.norm();
  if (!(n > kBinormalThreshold)) return std::nullopt;
  return ComplexVector(raw / n);
}

std::optional<ComplexVector> binormal_derivative(const EvolutionProblem& problem, double s,
                                                 BinormalDerivative method) {
  if (method == BinormalDerivative::Analytic) {
    // N_raw = T' - Psi <Psi|T'> - T <T|T'>. For stationary H both overlaps
    // and ||N_raw|| are constant in s, hence N' = (T'' - T<Psi|T'> - T'<T|T'>)/||N_raw||.
    const auto c = local_curve(problem, s);
    const ComplexVector raw = raw_binormal_from(c);
    const double n = raw.norm();
    if (!(n > kBinormalThreshold)) return std::nullopt;
    const Complex psi_dt = c.psi.dot(c.dt);
    const Complex t_dt = c.t.dot(c.dt);
    return ComplexVector((c.ddt - c.t * psi_dt - c.dt * t_dt) / n);
  }
  const double h = kFiniteDifferenceStep;
  const auto at = [&](double x) { return binormal_unit(problem, x); };
  const auto center = at(s);
  if (!center) return std::nullopt;
  const auto p1 = at(s + h), m1 = at(s - h), p2 = at(s + 2 * h), m2 = at(s - 2 * h);
  if (!p1 || !m1 || !p2 || !m2) return std::nullopt;
  return ComplexVector((-*p2 + 8.0 * *p1 - 8.0 * *m1 + *m2) / (12.0 * h));
}

CartanMatrix cartan_matrix(const EvolutionProblem& problem, double s, BinormalDerivative method) {
  const auto c = local_curve(problem, s);
  CartanMatrix m = CartanMatrix::Zero();
  // Row i holds the components of d e_i/ds: M_ij = <e_j|e_i'>.
  m(0, 0) = c.psi.dot(c.t);
  m(0, 1) = c.t.dot(c.t);
  m(1, 0) = c.psi.dot(c.dt);
  m(1, 1) = c.t.dot(c.dt);

  const ComplexVector raw = raw_binormal_from(c);
  const double n = raw.norm();
  if (!(n > kBinormalThreshold)) return m;
  const ComplexVector nvec = raw / n;
  const auto dn = binormal_derivative(problem, s, method);
  if (!dn) return m;
  m(0, 2) = nvec.dot(c.t);
  m(1, 2) = nvec.dot(c.dt);
  m(2, 0) = c.psi.dot(*dn);
  m(2, 1) = c.t.dot(*dn);
  m(2, 2) = nvec.dot(*dn);
  return m;
}

QuantumFrame build_frame(const EvolutionProblem& problem, double s,
                         std::optional<std::span<const ComplexVector>> completion_seed,
                         BinormalDerivative method) {
  const auto c = local_curve(problem, s);
  const ComplexVector raw = raw_binormal_from(c);
  const double raw_norm = raw.norm();

  QuantumFrame f{
      .s = s,
      .psi = StateVector::normalized(c.psi),
      .tangent = StateVector::normalized(c.t),
      .binormal_raw = raw,
      .binormal = std::nullopt,
      .extra = {},
      .kappa_sq = project_out(c.psi, c.dt).squaredNorm(),
      .tau_sq = raw.squaredNorm(),
  };

  std::vector<ComplexVector> basis{f.psi.vec()};
  basis.push_back(orthogonal_residual(basis, f.tangent.vec()).normalized());
  if (raw_norm > kBinormalThreshold) {
    ComplexVector nvec = orthogonal_residual(basis, raw / raw_norm);
    nvec.normalize();
    f.binormal = StateVector::normalized(nvec);
    basis.push_back(nvec);
  }

  const auto dim = static_cast<Eigen::Index>(problem.dim());
  if (completion_seed) {
    for (std::size_t k = 0; k < completion_seed->size(); ++k) {
      const ComplexVector& seed = (*completion_seed)[k];
      if (seed.size() != dim) {
        throw DimensionError("completion seed " + std::to_string(k) + " has mismatched dimension");
      }
      ComplexVector r = orthogonal_residual(basis, seed);
      const double rn = r.norm();
      if (rn < kIndependenceThreshold) throw DependenceError(k, rn);
      r /= rn;
      basis.push_back(r);
      f.extra.push_back(StateVector::normalized(r));
    }
  } else {
    for (Eigen::Index k = 0; k < dim && static_cast<Eigen::Index>(basis.size()) < dim; ++k) {
      ComplexVector e = ComplexVector::Zero(dim);
      e(k) = 1.0;
      ComplexVector r = orthogonal_residual(basis, e);
      const double rn = r.norm();
      if (rn < kCompletionSkipThreshold) continue;
      r /= rn;
      basis.push_back(r);
      f.extra.push_back(StateVector::normalized(r));
    }
  }

  f.cartan = cartan_matrix(problem, s, method);
  return f;
}

}  // namespace qcurve
