// Fast layerwise NTK vs explicit per-sample gradients, and OpenMP mean kernels vs the
// serial reference.  On a single core the second pair only measures overhead.
#include "ntkvar/ntk.hpp"
#include "ntkvar/rng.hpp"

#include <benchmark/benchmark.h>

#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ntkvar;

namespace {

Matrix inputs(std::size_t n, std::size_t d) {
  Rng rng(17);
  std::normal_distribution<double> g;
  Matrix x(n, d);
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = g(rng);
  return x;
}

void BM_ntk_fast(benchmark::State& s) {
  const auto h = static_cast<std::size_t>(s.range(0));
  const MlpArchitecture arch = MlpArchitecture::uniform(64, h, 3, 1, Activation::softplus);
  const MlpParams p = init_params(arch, 1);
  const Matrix x = inputs(64, 64);
  for (auto _ : s) benchmark::DoNotOptimize(empirical_ntk(p, x, x));
}

void BM_ntk_reference(benchmark::State& s) {
  const auto h = static_cast<std::size_t>(s.range(0));
  const MlpArchitecture arch = MlpArchitecture::uniform(64, h, 3, 1, Activation::softplus);
  const MlpParams p = init_params(arch, 1);
  const Matrix x = inputs(64, 64);
  for (auto _ : s) benchmark::DoNotOptimize(reference::empirical_ntk(p, x, x));
}

void BM_mean_kernels_parallel(benchmark::State& s) {
  const MlpArchitecture arch = MlpArchitecture::uniform(32, 256, 2, 1, Activation::softplus);
  const Matrix xt = inputs(50, 32), xe = inputs(40, 32);
  for (auto _ : s) benchmark::DoNotOptimize(mean_kernels(arch, xt, xe, static_cast<std::size_t>(s.range(0)), 3));
#ifdef _OPENMP
  s.counters["threads"] = omp_get_max_threads();
#endif
}

void BM_mean_kernels_serial(benchmark::State& s) {
  const MlpArchitecture arch = MlpArchitecture::uniform(32, 256, 2, 1, Activation::softplus);
  const Matrix xt = inputs(50, 32), xe = inputs(40, 32);
  for (auto _ : s)
    benchmark::DoNotOptimize(reference::mean_kernels(arch, xt, xe, static_cast<std::size_t>(s.range(0)), 3));
}

}  // namespace

BENCHMARK(BM_ntk_fast)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ntk_reference)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mean_kernels_parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mean_kernels_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
