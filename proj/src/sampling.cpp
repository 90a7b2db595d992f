#include "qcurve/sampling.hpp"

namespace qcurve::sampling {

HermitianOperator random_hermitian(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> g;
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix a(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const double re = g(rng);
      const double im = g(rng);
      a(r, c) = Complex(re, im);
    }
  }
  ComplexMatrix h = 0.5 * (a + a.adjoint());
  h.diagonal() = h.diagonal().real().cast<Complex>();
  return HermitianOperator(std::move(h));
}

StateVector random_state(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double re = g(rng);
    const double im = g(rng);
    v(k) = Complex(re, im);
  }
  return StateVector::normalized(v);
}

}  // namespace qcurve::sampling
