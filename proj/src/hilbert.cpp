#include "qcurve/hilbert.hpp"

#include <algorithm>
#include <cmath>

namespace qcurve {

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2) {
    throw InvariantError("state dimension must be at least 2");
  }
  const double n2 = amps_.squaredNorm();
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormTolerance) {
    throw InvariantError("state is not normalized: ||psi||^2 = " + std::to_string(n2));
  }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(ComplexVector::Map(amplitudes.begin(), static_cast<Eigen::Index>(amplitudes.size()))) {}

StateVector StateVector::normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw InvariantError("cannot normalize a zero or non-finite vector");
  }
  ComplexVector u = v / n;
  // One more pass absorbs the rounding of the division.
  u /= u.norm();
  return StateVector(std::move(u));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionError("basis index " + std::to_string(index) + " out of range for dimension " +
                         std::to_string(dim));
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) {
    throw DimensionError("inner product of states with dimensions " + std::to_string(dim()) + " and " +
                         std::to_string(other.dim()));
  }
  return amps_.dot(other.amps_);
}

StateVector StateVector::with_phase(double chi) const {
  return StateVector(ComplexVector(amps_ * std::polar(1.0, chi)));
}

HermitianOperator::HermitianOperator(ComplexMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw DimensionError("operator must be a non-empty square matrix");
  }
  if (!m_.allFinite()) {
    throw InvariantError("operator has non-finite entries");
  }
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance * scale) {
    throw InvariantError("operator is not Hermitian: max |M - M^dagger| = " + std::to_string(asym));
  }
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
}

HermitianOperator HermitianOperator::shifted(double c) const {
  ComplexMatrix m = m_;
  m.diagonal().array() += c;
  return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::scaled(double lambda) const {
  return HermitianOperator(ComplexMatrix(m_ * lambda));
}

double HermitianOperator::traceless_norm_sq() const {
  const Complex mean = m_.trace() / static_cast<double>(m_.rows());
  ComplexMatrix t = m_;
  t.diagonal().array() -= mean;
  return t.squaredNorm();
}

namespace {

ComplexMatrix pauli(char c) {
  ComplexMatrix p(2, 2);
  const Complex i{0.0, 1.0};
  switch (c) {
    case 'I': p << 1, 0, 0, 1; break;
    case 'X': p << 0, 1, 1, 0; break;
    case 'Y': p << 0, -i, i, 0; break;
    case 'Z': p << 1, 0, 0, -1; break;
    default:
      throw InvariantError(std::string("invalid Pauli character '") + c + "'");
  }
  return p;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

}  // namespace

HermitianOperator build_operator(std::span<const PauliTerm> terms, std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > 12) {
    throw DimensionError("qubit count must be in [1, 12], got " + std::to_string(n_qubits));
  }
  const auto dim = Eigen::Index{1} << n_qubits;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& term : terms) {
    if (term.word.size() != n_qubits) {
      throw InvariantError("Pauli word '" + term.word + "' has length " + std::to_string(term.word.size()) +
                           ", expected " + std::to_string(n_qubits));
    }
    if (!std::isfinite(term.coefficient)) {
      throw InvariantError("non-finite coefficient for Pauli word '" + term.word + "'");
    }
    ComplexMatrix prod = pauli(term.word.front());
    for (std::size_t k = 1; k < term.word.size(); ++k) {
      prod = kron(prod, pauli(term.word[k]));
    }
    h += term.coefficient * prod;
  }
  return HermitianOperator(std::move(h));
}

HermitianOperator build_operator(std::initializer_list<PauliTerm> terms, std::size_t n_qubits) {
  return build_operator(std::span<const PauliTerm>(terms.begin(), terms.size()), n_qubits);
}

double expectation(const HermitianOperator& op, const StateVector& state) {
  if (op.dim() != state.dim()) {
    throw DimensionError("operator dimension " + std::to_string(op.dim()) + " does not match state dimension " +
                         std::to_string(state.dim()));
  }
  const Complex value = state.vec().dot(op.matrix() * state.vec());
  const double scale = std::max(1.0, op.matrix().cwiseAbs().maxCoeff() * static_cast<double>(op.dim()));
  if (std::abs(value.imag()) > kNormTolerance * scale) {
    throw InvariantError("expectation value has imaginary residual " + std::to_string(value.imag()));
  }
  return value.real();
}

HermitianOperator projector_orthogonal(const StateVector& state) {
  const auto d = static_cast<Eigen::Index>(state.dim());
  ComplexMatrix p = ComplexMatrix::Identity(d, d) - state.vec() * state.vec().adjoint();
  // Exact Hermitian symmetry; the outer product is Hermitian up to rounding.
  p = (0.5 * (p + p.adjoint())).eval();
  return HermitianOperator(std::move(p));
}

ComplexVector project_out(const ComplexVector& unit, const ComplexVector& x) {
  return x - unit * unit.dot(x);
}

ComplexVector orthogonal_residual(std::span<const ComplexVector> basis, const ComplexVector& v) {
  ComplexVector r = v;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) {
      r -= q * q.dot(r);
    }
  }
  return r;
}

std::vector<ComplexVector> gram_schmidt(std::span<const ComplexVector> vectors) {
  std::vector<ComplexVector> out;
  out.reserve(vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (k > 0 && vectors[k].size() != vectors[0].size()) {
      throw DimensionError("gram_schmidt: vector " + std::to_string(k) + " has mismatched dimension");
    }
    ComplexVector r = orthogonal_residual(out, vectors[k]);
    const double n = r.norm();
    if (n < kIndependenceThreshold) {
      throw DependenceError(k, n);
    }
    out.push_back(r / n);
  }
  return out;
}

}  // namespace qcurve
