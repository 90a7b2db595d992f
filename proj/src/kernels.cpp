#include "qcurve/kernels.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qcurve::kernels {

namespace {

void check_shapes(const ComplexMatrix& h, const ComplexVector& x) {
  if (h.rows() != h.cols() || h.cols() != x.size()) {
    throw DimensionError("apply_shifted: operator is " + std::to_string(h.rows()) + "x" +
                         std::to_string(h.cols()) + ", vector has " + std::to_string(x.size()) + " entries");
  }
}

inline Complex row_value(const ComplexMatrix& h, double shift, const ComplexVector& x, Eigen::Index i) {
  return h.col(i).dot(x) - shift * x(i);
}

}  // namespace

void apply_shifted(const ComplexMatrix& h, double shift, const ComplexVector& x, ComplexVector& y) {
  check_shapes(h, x);
  const Eigen::Index n = x.size();
  y.resize(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
#endif
  for (Eigen::Index i = 0; i < n; ++i) {
    y(i) = row_value(h, shift, x, i);
  }
}

void apply_shifted_serial(const ComplexMatrix& h, double shift, const ComplexVector& x, ComplexVector& y) {
  check_shapes(h, x);
  const Eigen::Index n = x.size();
  y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y(i) = row_value(h, shift, x, i);
  }
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qcurve::kernels
