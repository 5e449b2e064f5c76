#include <doctest.h>

#include <optional>

#include "support/test_support.hpp"
#include "tropt/oracle.hpp"
#include "tropt/spectral.hpp"

using namespace tropt;
using tsup::kNegInf;

TEST_CASE("oracle: grid spec guards") {
    CHECK_THROWS_AS(oracle::GridSpec(1, 0, 0.1, 2), DomainError);
    CHECK_THROWS_AS(oracle::GridSpec(0, 1, -0.1, 2), DomainError);
    CHECK_THROWS_AS(oracle::GridSpec(0, 1, 0.1, 5), DomainError);
    CHECK(oracle::GridSpec(-5, 5, 0.25, 3).points_per_dim() == 41);

    const Problem problem(Matrix::zeros(max_plus, 4, 4), Vector(max_plus, {0, 0, 0, 0}),
                          Vector(max_plus, {0, 0, 0, 0}));
    CHECK_THROWS_AS(oracle::grid_minimize(problem, oracle::GridSpec(-5, 5, 0.01, 4)),
                    CostGuardError);
    const Problem times(Matrix::zeros(max_times, 2, 2), Vector(max_times, {1, 1}),
                        Vector(max_times, {1, 1}));
    CHECK_THROWS_AS(oracle::grid_minimize(times, oracle::GridSpec(0, 1, 0.5, 2)), DomainError);
}

TEST_CASE("oracle: grid minimize examples") {
    const Problem problem(Matrix::zeros(max_plus, 2, 2), Vector(max_plus, {-2, -2}),
                          Vector(max_plus, {0, 0}));
    const auto r = oracle::grid_minimize(problem, oracle::GridSpec(-5, 5, 0.25, 2));
    CHECK(r.value == -1);
    CHECK(r.argmin == Vector(max_plus, {-1, -1}));

    const Problem scan(Matrix(max_plus, {{2}}), Vector::zeros(max_plus, 1),
                       Vector(max_plus, {0}));
    CHECK(oracle::grid_minimize(scan, oracle::GridSpec(-5, 5, 0.25, 1)).value == 2);

    // Degenerate one-point grid.
    const auto single = oracle::grid_minimize(problem, oracle::GridSpec(1.5, 1.5, 1.0, 2));
    CHECK(single.value == objective(problem, Vector(max_plus, {1.5, 1.5})));
    CHECK(single.argmin == Vector(max_plus, {1.5, 1.5}));
}

TEST_CASE("oracle: min-plus grid minimizes in the semifield order") {
    // f(x) = min(a, p - x, x - q); the semifield minimum is the numeric
    // maximin, attained between p and q.
    const Problem problem(Matrix(min_plus, {{5.0}}), Vector(min_plus, {3.0}),
                          Vector(min_plus, {-1.0}));
    const auto r = oracle::grid_minimize(problem, oracle::GridSpec(-5, 5, 0.25, 1));
    CHECK(r.value == 2.0);
    CHECK(r.argmin == Vector(min_plus, {1.0}));
}

TEST_CASE("oracle: cycle mean examples") {
    CHECK(oracle::cycle_mean_radius(Matrix(max_plus, {{kNegInf, 1}, {2, kNegInf}})) == 1.5);
    CHECK(oracle::cycle_mean_radius(Matrix(max_plus, {{-0.75}})) == -0.75);
    CHECK(oracle::cycle_mean_radius(Matrix::zeros(max_plus, 4, 4)) == kNegInf);
    CHECK_THROWS_AS(oracle::cycle_mean_radius(Matrix::zeros(max_plus, 9, 9)), CostGuardError);
}

TEST_CASE("oracle: cycle means agree with the closed-form radius") {
    tsup::Rng rng(211);
    for (int iter = 0; iter < 500; ++iter) {
        const Semifield sf = tsup::kAllTags[iter % 4];
        const std::size_t n = 1 + rng.index(6);
        const Matrix a = tsup::random_matrix(rng, sf, n, n, -5, 5, rng.uniform(0.2, 0.8));
        REQUIRE(approx_equal(oracle::cycle_mean_radius(a), spectral_radius(a).lambda, 1e-9));
    }
}

TEST_CASE("oracle: grid value brackets the solver minimum") {
    tsup::Rng rng(223);
    const double h = 0.25;
    int kept = 0;
    while (kept < 20) {
        const std::size_t n = 1 + rng.index(2);
        Matrix a = tsup::random_matrix(rng, max_plus, n, n, -2, 2, 0.5);
        Vector p = tsup::random_vector(rng, max_plus, n, -2, 2, 0.2);
        Vector q = tsup::random_regular_vector(rng, max_plus, n, -2, 2);
        const Problem problem(a, p, q);
        std::optional<SolutionSet> s;
        try {
            s = solve(problem);
        } catch (const IllPosedError&) {
            continue;
        }
        const Vector witness = sample_minimizer(*s, tsup::random_inbox_u(rng, *s, 1.0));
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i)
            inside = inside && witness[i] > -4.0 && witness[i] < 4.0;
        if (!inside) continue;
        ++kept;

        const auto r = oracle::grid_minimize(problem, oracle::GridSpec(-5, 5, h, n));
        REQUIRE(r.value >= s->mu - 1e-9);
        REQUIRE(r.value <= s->mu + h + 1e-9);
    }
}
