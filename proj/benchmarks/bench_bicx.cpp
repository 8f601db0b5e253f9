#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bicx/bicomplex.hpp"
#include "bicx/function_space.hpp"
#include "bicx/oscillator.hpp"
#include "bicx/tmodule.hpp"

namespace {

using bicx::Bicomplex;

std::vector<Bicomplex> random_values(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<Bicomplex> out(n);
    for (auto& w : out) {
        w = Bicomplex::from_idempotent({dist(gen), dist(gen)}, {dist(gen), dist(gen)});
    }
    return out;
}

void BM_BicomplexMultiply(benchmark::State& state) {
    const auto values = random_values(1024, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        const Bicomplex p = values[i % 1024] * values[(i + 1) % 1024];
        benchmark::DoNotOptimize(p);
        ++i;
    }
}
BENCHMARK(BM_BicomplexMultiply);

void BM_ScalarProduct(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const bicx::TVector psi{random_values(n, 2)};
    const bicx::TVector phi{random_values(n, 3)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bicx::scalar_product(psi, phi));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScalarProduct)->Range(8, 4096)->Complexity(benchmark::oN);

void BM_Orthonormalize(benchmark::State& state) {
    std::vector<bicx::TVector> kets;
    for (int i = 0; i < 12; ++i) kets.emplace_back(random_values(16, 10 + i));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bicx::orthonormalize(kets));
    }
}
BENCHMARK(BM_Orthonormalize);

void BM_InnerProduct(benchmark::State& state) {
    std::mt19937_64 gen(4);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<bicx::GaussTerm> tu, tv;
    for (int i = 0; i < 10; ++i) {
        tu.push_back({i, 0.5 + (i % 3) * 0.5, Bicomplex(dist(gen))});
        tv.push_back({i, 0.5 + (i % 2) * 1.0, Bicomplex(dist(gen))});
    }
    const bicx::GaussPoly u(tu);
    const bicx::GaussPoly v(tv);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bicx::inner_product(u, v));
    }
}
BENCHMARK(BM_InnerProduct);

void BM_Eigenfunction(benchmark::State& state) {
    bicx::OscillatorParams p;
    p.xi = Bicomplex::from_idempotent({1.0, 0.0}, {2.0, 0.0});
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bicx::eigenfunction(l, p));
    }
}
BENCHMARK(BM_Eigenfunction)->Arg(4)->Arg(10)->Arg(20);

void BM_GramMatrix(benchmark::State& state) {
    bicx::OscillatorParams p;
    p.xi = Bicomplex::from_idempotent({1.0, 0.0}, {2.0, 0.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(bicx::gram_matrix(8, p));
    }
}
BENCHMARK(BM_GramMatrix);

}  // namespace

BENCHMARK_MAIN();
