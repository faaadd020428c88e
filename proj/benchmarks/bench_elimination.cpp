#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "exactlin/backsolve.hpp"
#include "exactlin/elimination.hpp"
#include "exactlin/integer.hpp"
#include "exactlin/matrix.hpp"

namespace {

using exactlin::AugmentedSystem;
using exactlin::Int;
using exactlin::Matrix;

// Deterministic inputs: one fixed stream per size, single-digit entries so
// timings measure the algorithm rather than the draw.
Matrix<Int> random_matrix(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    Matrix<Int> a(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) a(i, j) = Int(entry(rng));
    }
    return a;
}

std::vector<Int> random_vector(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::vector<Int> b;
    b.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b.push_back(Int(entry(rng)));
    return b;
}

Matrix<Int> random_nonsingular(int n, std::uint64_t seed) {
    for (;; ++seed) {
        Matrix<Int> a = random_matrix(n, seed);
        if (!determinant(a).is_zero()) return a;
    }
}

void BM_ForwardEliminate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AugmentedSystem<Int> system =
        augment(random_matrix(n, 0x5eed0000 + static_cast<std::uint64_t>(n)),
                random_vector(n, 0x5eed1000 + static_cast<std::uint64_t>(n)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward_eliminate(system));
    }
}
BENCHMARK(BM_ForwardEliminate)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(100);

void BM_BackSubstitute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const exactlin::EliminationResult<Int> elim =
        forward_eliminate(augment(random_nonsingular(n, 0x5eed2000 + static_cast<std::uint64_t>(n)),
                                  random_vector(n, 0x5eed3000 + static_cast<std::uint64_t>(n))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(back_substitute(elim));
    }
}
BENCHMARK(BM_BackSubstitute)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(100);

void BM_Solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix<Int> a = random_nonsingular(n, 0x5eed4000 + static_cast<std::uint64_t>(n));
    const std::vector<Int> b = random_vector(n, 0x5eed5000 + static_cast<std::uint64_t>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(a, b));
    }
}
BENCHMARK(BM_Solve)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(100);

void BM_Adjugate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix<Int> a = random_nonsingular(n, 0x5eed6000 + static_cast<std::uint64_t>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adjugate(a));
    }
}
BENCHMARK(BM_Adjugate)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
