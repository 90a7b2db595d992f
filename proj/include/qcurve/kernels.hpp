#pragma once

// Data-parallel inner loops. Every parallel kernel has a serial twin that
// performs the same arithmetic in the same order, so the two agree bitwise;
// the serial versions are the reference the tests and benchmarks compare to.

#include "qcurve/hilbert.hpp"

namespace qcurve::kernels {

/// Rows below this dimension are not worth a parallel region.
inline constexpr Eigen::Index kParallelMinDim = 128;

/// y = (H - shift I) x, using the Hermitian symmetry y_i = <H_{:,i}, x>
/// so each row reads a contiguous column.
void apply_shifted(const ComplexMatrix& h, double shift, const ComplexVector& x, ComplexVector& y);
void apply_shifted_serial(const ComplexMatrix& h, double shift, const ComplexVector& x, ComplexVector& y);

inline ComplexVector apply_shifted(const ComplexMatrix& h, double shift, const ComplexVector& x) {
  ComplexVector y(x.size());
  apply_shifted(h, shift, x, y);
  return y;
}

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

/// Runs body(i) for i in [0, n); iterations must be independent. Results are
/// written by index, so output order never depends on scheduling.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    body(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

template <typename Body>
void serial_for(std::size_t n, Body&& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace qcurve::kernels
