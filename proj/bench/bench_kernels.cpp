// Parallel kernels against their serial twins.
//   build/bench/qcurve_bench --benchmark_filter=Shifted

#include <benchmark/benchmark.h>

#include "qcurve/frame.hpp"
#include "qcurve/kernels.hpp"
#include "qcurve/moments.hpp"
#include "qcurve/sampling.hpp"

namespace {

using namespace qcurve;

struct Operands {
  ComplexMatrix h;
  ComplexVector x;
};

Operands operands(std::size_t dim) {
  sampling::Rng rng(11);
  return {sampling::random_hermitian(dim, rng).matrix(), sampling::random_state(dim, rng).vec()};
}

template <bool Parallel>
void BM_ApplyShifted(benchmark::State& state) {
  const auto [h, x] = operands(static_cast<std::size_t>(state.range(0)));
  ComplexVector y(x.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::apply_shifted(h, 0.25, x, y);
    } else {
      kernels::apply_shifted_serial(h, 0.25, x, y);
    }
    benchmark::DoNotOptimize(y.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(h.size() * sizeof(Complex)));
}
BENCHMARK(BM_ApplyShifted<true>)->Name("ApplyShifted/parallel")->RangeMultiplier(2)->Range(64, 2048);
BENCHMARK(BM_ApplyShifted<false>)->Name("ApplyShifted/serial")->RangeMultiplier(2)->Range(64, 2048);

// One curvature/torsion evaluation per problem, as a parameter sweep does.
template <bool Parallel>
void BM_Sweep(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  sampling::Rng rng(12);
  std::vector<EvolutionProblem> batch;
  for (int k = 0; k < 64; ++k) batch.emplace_back(sampling::random_hermitian(dim, rng), sampling::random_state(dim, rng));
  std::vector<double> out(batch.size());
  const auto body = [&](std::size_t i) { out[i] = curvature_geometric(batch[i], 0.0) + torsion_geometric(batch[i], 0.0); };
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel_for(batch.size(), body);
    } else {
      kernels::serial_for(batch.size(), body);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(batch.size()));
}
BENCHMARK(BM_Sweep<true>)->Name("Sweep/parallel")->Arg(8)->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_Sweep<false>)->Name("Sweep/serial")->Arg(8)->Arg(64)->Arg(256)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
