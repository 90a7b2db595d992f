#include <gtest/gtest.h>

#include <atomic>

#include "qcurve/kernels.hpp"
#include "qcurve/sampling.hpp"

using namespace qcurve;

namespace {

// Parallel and serial kernels run the same per-row arithmetic, so they must
// agree bit for bit, not just within a tolerance.
TEST(ApplyShifted, ParallelMatchesSerialExactly) {
  sampling::Rng rng(11);
  for (std::size_t n : {4u, 64u, 200u, 300u}) {
    const auto h = sampling::random_hermitian(n, rng);
    const auto x = sampling::random_state(n, rng).vec();
    ComplexVector par(x.size()), ser(x.size());
    kernels::apply_shifted(h.matrix(), 0.37, x, par);
    kernels::apply_shifted_serial(h.matrix(), 0.37, x, ser);
    EXPECT_TRUE((par.array() == ser.array()).all()) << "n=" << n;
  }
}

TEST(ApplyShifted, MatchesDenseProduct) {
  sampling::Rng rng(12);
  const auto h = sampling::random_hermitian(150, rng);
  const auto x = sampling::random_state(150, rng).vec();
  const ComplexMatrix shifted = h.matrix() - 1.25 * ComplexMatrix::Identity(150, 150);
  EXPECT_LT((kernels::apply_shifted(h.matrix(), 1.25, x) - shifted * x).norm(), 1e-12);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  kernels::parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_GE(kernels::max_threads(), 1);
}

}  // namespace
