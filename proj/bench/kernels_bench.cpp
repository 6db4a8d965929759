// Serial against OpenMP paths of the inner kernels. Arg 0 runs the serial
// reference, arg 1 the parallel path; TOOL_THREADS caps the thread count.

#include "shepade/kernels.hpp"
#include "shepade/pade.hpp"

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <random>

using namespace shepade;

namespace {

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Exec::serial : kernels::Exec::parallel;
}

std::vector<MpReal> random_reals(std::size_t n, const PrecisionCtx& ctx, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<MpReal> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(u(rng), ctx);
  return out;
}

void BM_AberthSweep(benchmark::State& state) {
  const PrecisionCtx ctx(100);
  const std::size_t degree = 120;
  std::vector<MpComplex> c;
  for (const auto& x : random_reals(degree + 1, ctx, 1)) c.emplace_back(x);
  const ComplexPoly p(c);
  const ComplexPoly dp = poly_derivative(p);
  std::vector<MpReal> mags;
  for (const auto& z : c) mags.push_back(abs(z));
  const RealPoly coeff_abs(mags);
  std::vector<MpComplex> roots;
  const auto re = random_reals(degree, ctx, 2), im = random_reals(degree, ctx, 3);
  for (std::size_t i = 0; i < degree; ++i) roots.emplace_back(re[i], im[i]);
  const std::vector<char> active(degree, 1);
  std::vector<kernels::AberthStep> out(degree);
  for (auto _ : state) {
    kernels::aberth_sweep(p, dp, coeff_abs, roots, active, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_EliminateBelow(benchmark::State& state) {
  const PrecisionCtx ctx(200);
  const std::size_t n = 150;
  const auto base = random_reals(n * (n + 1), ctx, 4);
  for (auto _ : state) {
    state.PauseTiming();
    std::vector<MpReal> a = base;
    state.ResumeTiming();
    kernels::eliminate_below(a, n, n + 1, 0, exec_of(state));
    benchmark::DoNotOptimize(a.data());
  }
}

void BM_BlockedSums(benchmark::State& state) {
  const PrecisionCtx ctx(100);
  const auto x = random_reals(4000, ctx, 5);
  const std::size_t m = 40;
  for (auto _ : state) {
    auto sums = kernels::blocked_sums(
        x.size(), m, ctx.bits(),
        [&](std::size_t i, std::vector<MpReal>& acc) {
          MpReal power(1L, ctx);
          for (std::size_t k = 0; k < m; ++k) {
            acc[k] += power;
            power *= x[i];
          }
        },
        exec_of(state));
    benchmark::DoNotOptimize(sums.data());
  }
}

void BM_BuildPade(benchmark::State& state) {
  const PrecisionCtx ctx(100);
  const int N = 60;
  // Taylor coefficients of 1 / sqrt(1 - w): a branch point at w = 1.
  std::vector<MpReal> a;
  MpReal c(1L, ctx);
  for (int n = 0; n <= 2 * N; ++n) {
    a.push_back(c);
    c = c * static_cast<long>(2 * n + 1) / static_cast<long>(2 * n + 2);
  }
  PadeOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) {
    auto p = build_pade(std::span<const MpReal>(a), N, ctx, options);
    benchmark::DoNotOptimize(p.effective_N);
  }
}

}  // namespace

BENCHMARK(BM_AberthSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EliminateBelow)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockedSums)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildPade)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("TOOL_THREADS")) kernels::set_thread_limit(std::atoi(threads));
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
