#include <benchmark/benchmark.h>

#include "radspec/ritz.hpp"
#include "radspec/rpm.hpp"
#include "radspec/truncation.hpp"

using namespace radspec;

namespace {

void bench_riccati_series(benchmark::State& state) {
    const BigReal s(0L), alpha = -sqrt(BigReal(2L)), w(BigReal(11L));
    const long jmax = state.range(0);
    for (auto _ : state) {
        RiccatiSeries r = riccati_series(s, alpha, w, jmax);
        benchmark::DoNotOptimize(r.coeffs.back());
    }
}
BENCHMARK(bench_riccati_series)->Arg(31)->Arg(63);

void bench_hankel_logdet(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    const BigReal s(0L), alpha = -sqrt(BigReal(2L)), w(BigReal(11L));
    RiccatiSeries series = riccati_series(s, alpha, w, static_cast<long>(2 * dim) + 1);
    for (auto _ : state) {
        LogDet d = hankel_logdet(series, dim, 0);
        benchmark::DoNotOptimize(d.log_abs);
    }
}
BENCHMARK(bench_hankel_logdet)->Arg(8)->Arg(15);

void bench_ritz_spectrum(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const BigReal s(0L), alpha = -sqrt(BigReal(2L));
    for (auto _ : state) {
        RitzResult r = ritz_spectrum(s, alpha, n);
        benchmark::DoNotOptimize(r.eigenvalues.front());
    }
}
BENCHMARK(bench_ritz_spectrum)->Arg(6)->Arg(10)->Arg(16);

void bench_truncation_solutions(benchmark::State& state) {
    const long n = state.range(0);
    const BigReal s(0L);
    for (auto _ : state) {
        auto sols = truncation_solutions(n, s);
        benchmark::DoNotOptimize(sols.back().alpha_root);
    }
}
BENCHMARK(bench_truncation_solutions)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
