#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "conjsum/deviation.hpp"
#include "conjsum/fourier_engine.hpp"
#include "conjsum/kernels.hpp"
#include "conjsum/matrix_lab.hpp"
#include "conjsum/norm_space.hpp"
#include "conjsum/periodic_function.hpp"

namespace {

void BM_ConjDirichlet(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    double t = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjsum::conj_dirichlet(k, 1, t));
        t += 1e-6;
    }
}
BENCHMARK(BM_ConjDirichlet)->Arg(64)->Arg(1024);

void BM_MatrixMean(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto f = conjsum::make_weierstrass(0.5, 8);
    const auto fd = conjsum::fourier_coeffs(f, 128);
    const auto A = conjsum::make_cesaro();
    double x = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjsum::matrix_mean(A, fd, n, x, true));
        x += 1e-4;
    }
}
BENCHMARK(BM_MatrixMean)->Arg(64)->Arg(512);

void BM_SupNorm(benchmark::State& state) {
    const auto space = conjsum::NormSpace::sup(2048);
    const auto& xs = space.grid();
    std::vector<double> samples(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) samples[i] = std::sin(xs[i]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(space.norm_of_samples(samples));
    }
}
BENCHMARK(BM_SupNorm);

void BM_ConjModulus(benchmark::State& state) {
    const auto space = conjsum::NormSpace::lp(2.0, 512);
    const auto f = conjsum::make_weierstrass(0.5, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjsum::conj_modulus2(space, f, 0.1, 64));
    }
}
BENCHMARK(BM_ConjModulus);

void BM_ConjugateTruncated(benchmark::State& state) {
    const auto f = conjsum::make_cosine(3);
    double x = 0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjsum::conjugate_truncated(f, x, 0.05));
        x += 1e-3;
    }
}
BENCHMARK(BM_ConjugateTruncated);

void BM_TailVariation(benchmark::State& state) {
    const auto A = conjsum::make_riesz();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjsum::a_nr(A, n, 2));
    }
}
BENCHMARK(BM_TailVariation)->Arg(256)->Arg(1024);

} // namespace

BENCHMARK_MAIN();
