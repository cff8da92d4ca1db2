// OpenMP kernels against their serial reference implementations.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <cmath>
#include <random>

#include "glab/circle.hpp"
#include "glab/explicit_formula.hpp"
#include "glab/goldbach.hpp"
#include "glab/reference.hpp"
#include "glab/sieve.hpp"
#include "glab/zeros.hpp"

using namespace glab;

namespace {

const ZeroTable& zero_table() {
  static const ZeroTable z = [] {
    try {
      return load_zeros_file(GLAB_DATA_DIR "/zeros100k.txt");
    } catch (const std::exception&) {
      return builtin_zeros();
    }
  }();
  return z;
}

void BM_SieveSegmented(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_lambda(n).values().data());
}

void BM_SieveSpf(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::lambda_spf(n).values().data());
}

void BM_GFft(benchmark::State& state) {
  const LambdaTable lam = build_lambda(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g_table_fft(lam).g(2));
}

void BM_GDirectParallel(benchmark::State& state) {
  const LambdaTable lam = build_lambda(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g_table_direct(lam).g(2));
}

void BM_GSerial(benchmark::State& state) {
  const LambdaTable lam = build_lambda(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::g_serial(lam).data());
}

void BM_HTermParallel(benchmark::State& state) {
  const ZeroTable& z = zero_table();
  for (auto _ : state) benchmark::DoNotOptimize(h_term(123456.5, z, z.back()).value);
  state.counters["zeros"] = static_cast<double>(z.size());
}

void BM_HTermSerial(benchmark::State& state) {
  const ZeroTable& z = zero_table();
  for (auto _ : state) benchmark::DoNotOptimize(reference::h_term_serial(123456.5, z, z.back()));
}

void BM_GridFft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(n);
  for (auto& v : c) v = {u(rng), u(rng)};
  for (auto _ : state)
    benchmark::DoNotOptimize(exp_sum_grid(std::span<const cplx>(c), 2 * n + 2).values.data());
}

void BM_GridDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(n);
  for (auto& v : c) v = {u(rng), u(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(reference::exp_sum_direct(c, 2 * n + 2).data());
}

}  // namespace

BENCHMARK(BM_SieveSegmented)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveSpf)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GFft)->Arg(1 << 12)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GDirectParallel)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GSerial)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HTermParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HTermSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridFft)->Arg(1 << 8)->Arg(1 << 11)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GridDirect)->Arg(1 << 8)->Arg(1 << 11)->Unit(benchmark::kMicrosecond);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
