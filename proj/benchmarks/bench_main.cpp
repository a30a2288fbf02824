#include "ffmom/asym.hpp"
#include "ffmom/charsum.hpp"
#include "ffmom/cyclo.hpp"
#include "ffmom/ensemble.hpp"
#include "ffmom/enumerate.hpp"
#include "ffmom/lfunc.hpp"
#include "ffmom/poly.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace ffmom;

namespace {

std::vector<Poly> random_monics(const Fq& F, int deg, std::size_t count,
                                uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<uint64_t> pick(0, monic_count(F, deg) - 1);
    std::vector<Poly> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(monic_of_index(F, deg, pick(rng)));
    }
    return out;
}

void BM_jacobi_symbol(benchmark::State& state) {
    Fq F(5);
    std::vector<Poly> num = random_monics(F, 7, 64, 1);
    std::vector<Poly> den = random_monics(F, 3, 64, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            jacobi_symbol(F, num[i & 63], den[(i * 7) & 63]));
        ++i;
    }
}
BENCHMARK(BM_jacobi_symbol);

void BM_gauss_sum_direct(benchmark::State& state) {
    Fq F(5);
    Poly f = monic_of_index(F, 3, 57);
    Poly V = monic_of_index(F, 2, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sum_direct(F, V, f));
    }
}
BENCHMARK(BM_gauss_sum_direct);

void BM_gauss_sum_fast(benchmark::State& state) {
    Fq F(5);
    Poly f = monic_of_index(F, 3, 57);
    Poly V = monic_of_index(F, 2, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sum_fast(F, V, f));
    }
}
BENCHMARK(BM_gauss_sum_fast);

void BM_coeff_sum(benchmark::State& state) {
    Fq F(5);
    Poly D = from_string(F, "3,1,0,2,0,0,0,1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(coeff_sum(F, D, 3));
    }
}
BENCHMARK(BM_coeff_sum);

void BM_l_polynomial(benchmark::State& state) {
    Fq F(5);
    Poly D = from_string(F, "1,2,0,3,0,1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(l_polynomial_charsum(F, D));
    }
}
BENCHMARK(BM_l_polynomial);

void BM_first_moment_g2(benchmark::State& state) {
    Fq F(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(first_moment(F, 2, 1, 1));
    }
}
BENCHMARK(BM_first_moment_g2);

void BM_constants(benchmark::State& state) {
    Fq F(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(constant_C1(F, 30));
        benchmark::DoNotOptimize(dproduct_special(F, 30));
    }
}
BENCHMARK(BM_constants);

void BM_predict(benchmark::State& state) {
    Fq F(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(predict_moment(F, 3, 30));
    }
}
BENCHMARK(BM_predict);

}  // namespace

BENCHMARK_MAIN();
