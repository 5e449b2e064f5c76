#include <benchmark/benchmark.h>

#include <random>

#include "tropt/inequalities.hpp"
#include "tropt/linalg.hpp"
#include "tropt/solver.hpp"
#include "tropt/spectral.hpp"

namespace {

using namespace tropt;

Matrix random_matrix(std::size_t n, double zero_prob, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> value(-5.0, 5.0);
    std::bernoulli_distribution zero(zero_prob);
    Matrix m = Matrix::zeros(max_plus, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!zero(eng)) m(i, j) = value(eng);
    return m;
}

Vector random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> value(-5.0, 5.0);
    std::vector<double> v(n);
    for (auto& e : v) e = value(eng);
    return Vector(max_plus, std::move(v));
}

void BM_MatrixMultiply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, 0.3, 1);
    const Matrix b = random_matrix(n, 0.3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatrixMultiply)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_BoundedStar(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SpectralResult r = spectral_radius(random_matrix(n, 0.3, 3));
    Matrix a = random_matrix(n, 0.3, 3);
    if (!max_plus.is_zero(r.lambda)) a = scale(max_plus.inv(r.lambda), a);
    for (auto _ : state) benchmark::DoNotOptimize(bounded_star(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BoundedStar)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_SpectralRadius(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, 0.3, 4);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(a));
}
BENCHMARK(BM_SpectralRadius)->RangeMultiplier(2)->Range(8, 64);

void BM_Solve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Problem problem(random_matrix(n, 0.3, 5), random_vector(n, 6), random_vector(n, 7));
    for (auto _ : state) benchmark::DoNotOptimize(solve(problem));
}
BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(8, 64);

void BM_ConeGenerator(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Matrix a = random_matrix(n, 0.6, 8);
    const SpectralResult r = spectral_radius(a);
    if (!max_plus.is_zero(r.lambda)) a = scale(max_plus.inv(r.lambda), a);
    for (auto _ : state) benchmark::DoNotOptimize(cone_generator(a));
}
BENCHMARK(BM_ConeGenerator)->RangeMultiplier(2)->Range(8, 64);

} // namespace

BENCHMARK_MAIN();
