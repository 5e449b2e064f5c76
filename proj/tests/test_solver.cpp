#include <doctest.h>

#include <optional>

#include "support/test_support.hpp"
#include "tropt/inequalities.hpp"
#include "tropt/oracle.hpp"
#include "tropt/solver.hpp"
#include "tropt/spectral.hpp"
#include "tropt/structure.hpp"

using namespace tropt;
using tsup::kNegInf;

namespace {

// Random instance with q regular and mu nonzero; entry levels stay small so
// desk-scale grids can reach the minimizers.
Problem random_solvable(tsup::Rng& rng, Semifield sf, std::size_t n, double lo = -2, double hi = 2) {
    for (;;) {
        Matrix a = tsup::random_matrix(rng, sf, n, n, lo, hi, rng.uniform(0.2, 0.8));
        Vector p = tsup::random_vector(rng, sf, n, lo, hi, 0.2);
        Vector q = tsup::random_regular_vector(rng, sf, n, lo, hi);
        Problem problem(std::move(a), std::move(p), std::move(q));
        const double lambda = spectral_radius(problem.A).lambda;
        const double qp = multiply(conjugate(problem.q), problem.p);
        if (!sf.is_zero(sf.add(lambda, qp))) return problem;
    }
}

Matrix a_mu_of(const Problem& problem, const SolutionSet& s) {
    return scale(problem.semifield().inv(s.mu), problem.A);
}

} // namespace

TEST_CASE("solver: objective examples") {
    const Problem p1(Matrix::zeros(max_plus, 2, 2), Vector(max_plus, {-2, -2}),
                     Vector(max_plus, {0, 0}));
    CHECK(objective(p1, Vector(max_plus, {0, 0})) == 0);
    CHECK_THROWS_AS(objective(p1, Vector(max_plus, {0, kNegInf})), DomainError);

    const Problem p2(Matrix(max_plus, {{3.5}}), Vector(max_plus, {0}), Vector(max_plus, {0}));
    CHECK(objective(p2, Vector(max_plus, {0})) == 3.5);

    // An eigenvector of an irreducible A cannot push x^- A x below lambda.
    const Matrix a(max_plus, {{kNegInf, 1}, {2, kNegInf}});
    const double lambda = spectral_radius(a).lambda;
    const Problem p3(a, Vector(max_plus, {-1, 0}), Vector(max_plus, {1, 1}));
    CHECK(max_plus.leq(lambda, objective(p3, eigenvector_irreducible(a, lambda))));
}

TEST_CASE("solver: pure two-sided bound instance (A = zero)") {
    const Problem problem(Matrix::zeros(max_plus, 2, 2), Vector(max_plus, {-2, -2}),
                          Vector(max_plus, {0, 0}));
    const SolutionSet s = solve(problem);
    CHECK(s.mu == -1);
    CHECK(s.lambda == kNegInf);
    CHECK(s.delta == -1);
    CHECK(s.B == Matrix::identity(max_plus, 2));
    CHECK(s.lower == Vector(max_plus, {-1, -1}));
    CHECK(s.upper_support == std::vector<std::size_t>{0, 1});
    CHECK(s.upper_values == std::vector<double>{-1, -1});

    // The box collapses to a single minimizer here.
    const Vector x = sample_minimizer(s, Vector(max_plus, {-1, -1}));
    CHECK(x == Vector(max_plus, {-1, -1}));
    CHECK(objective(problem, x) == s.mu);

    const auto grid = oracle::grid_minimize(problem, oracle::GridSpec(-5, 5, 0.01, 2));
    CHECK(grid.value == -1);
    CHECK(grid.argmin == Vector(max_plus, {-1, -1}));
}

TEST_CASE("solver: one-dimensional instance with zero p") {
    const Problem problem(Matrix(max_plus, {{2}}), Vector::zeros(max_plus, 1),
                          Vector(max_plus, {0}));
    const SolutionSet s = solve(problem);
    CHECK(s.lambda == 2);
    CHECK(s.delta == kNegInf);
    CHECK(s.mu == 2);
    CHECK(s.B == Matrix(max_plus, {{0}}));
    CHECK(s.lower == Vector(max_plus, {kNegInf}));
    CHECK(s.upper_support == std::vector<std::size_t>{0});
    CHECK(s.upper_values == std::vector<double>{2});

    // objective = max(2, x - 0); any x <= 2 attains the minimum.
    for (double x : {2.0, 0.0, -3.0}) CHECK(objective(problem, Vector(max_plus, {x})) == 2);
    CHECK(objective(problem, Vector(max_plus, {3.0})) == 3);
    const auto grid = oracle::grid_minimize(problem, oracle::GridSpec(-5, 5, 0.25, 1));
    CHECK(grid.value == 2);
}

TEST_CASE("solver: reducible diagonal instance") {
    const Problem problem(Matrix(max_plus, {{0, kNegInf}, {kNegInf, -1}}),
                          Vector(max_plus, {-2, -2}), Vector(max_plus, {0, 0}));
    const SolutionSet s = solve(problem);
    CHECK(s.lambda == 0);
    CHECK(s.delta == -1);
    CHECK(s.mu == 0);
    CHECK(s.B == Matrix::identity(max_plus, 2));
    CHECK(s.lower == Vector(max_plus, {-2, -2}));
    CHECK(s.upper_values == std::vector<double>{0, 0});

    // Confirmed against the grid oracle before trusting the box.
    const auto grid = oracle::grid_minimize(problem, oracle::GridSpec(-5, 5, 0.25, 2));
    CHECK(grid.value == 0);
    CHECK(is_minimizer(problem, s, Vector(max_plus, {0, 0})));
    CHECK(is_minimizer(problem, s, Vector(max_plus, {-2, -2})));
    CHECK(is_minimizer(problem, s, Vector(max_plus, {-1, -0.5})));
    CHECK(!is_minimizer(problem, s, Vector(max_plus, {1, 0})));
}

TEST_CASE("solver: ill-posed when both lambda and delta vanish") {
    CHECK_THROWS_AS(solve(Problem(Matrix::zeros(max_plus, 2, 2), Vector::zeros(max_plus, 2),
                                  Vector(max_plus, {0, 0}))),
                    IllPosedError);
    CHECK_THROWS_AS(solve(Problem(Matrix::zeros(min_times, 2, 2), Vector::zeros(min_times, 2),
                                  Vector::zeros(min_times, 2))),
                    IllPosedError);
    CHECK_THROWS_AS(Problem(Matrix::zeros(max_plus, 2, 2), Vector::zeros(max_plus, 3),
                            Vector::zeros(max_plus, 2)),
                    DimensionError);
}

TEST_CASE("solver: sample_minimizer guards the box") {
    const Problem problem(Matrix(max_plus, {{0, kNegInf}, {kNegInf, -1}}),
                          Vector(max_plus, {-2, -2}), Vector(max_plus, {0, 0}));
    const SolutionSet s = solve(problem);
    CHECK_THROWS_AS(sample_minimizer(s, Vector(max_plus, {-3, -1})), DomainError); // below lower
    CHECK_THROWS_AS(sample_minimizer(s, Vector(max_plus, {1, -1})), DomainError);  // above upper
    CHECK_THROWS_AS(sample_minimizer(s, Vector(max_plus, {kNegInf, -1})), DomainError);
    CHECK(sample_minimizer(s, Vector(max_plus, {-1, -1})) == Vector(max_plus, {-1, -1}));
}

TEST_CASE("solver: random instances, soundness and attainment") {
    tsup::Rng rng(101);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 1 + rng.index(5);
        const Problem problem = random_solvable(rng, max_plus, n, -4, 4);
        const SolutionSet s = solve(problem);

        for (int k = 0; k < 100; ++k) {
            const Vector x = tsup::random_regular_vector(rng, max_plus, n, -6, 6);
            REQUIRE(objective(problem, x) >= s.mu - 1e-9);
        }
        for (int k = 0; k < 20; ++k) {
            const Vector x = sample_minimizer(s, tsup::random_inbox_u(rng, s));
            REQUIRE(approx_equal(objective(problem, x), s.mu, 1e-9));
            REQUIRE(is_minimizer(problem, s, x));
        }
    }
}

TEST_CASE("solver: desk-scale completeness against the grid") {
    tsup::Rng rng(103);
    int kept = 0;
    while (kept < 15) {
        const std::size_t n = 1 + rng.index(3);
        const Problem problem = random_solvable(rng, max_plus, n);
        const SolutionSet s = solve(problem);

        // Keep instances whose minimizers fall well inside the grid window.
        const Vector witness = sample_minimizer(s, tsup::random_inbox_u(rng, s, 1.0));
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i)
            inside = inside && witness[i] > -4.0 && witness[i] < 4.0;
        if (!inside) continue;
        ++kept;

        tsup::for_each_grid_point(-5.0, 5.0, 0.25, n, [&](const std::vector<double>& coords) {
            const Vector x(max_plus, coords);
            const double value = objective(problem, x);
            REQUIRE(value >= s.mu - 1e-9);
            if (value <= s.mu + 1e-9) {
                REQUIRE(is_minimizer(problem, s, x));
                if (value <= s.mu + 1e-12) {
                    // Exact grid minimizers must live in the image of B with
                    // an in-box parameter (u = x works).
                    REQUIRE(tsup::approx_vector_equal(multiply(s.B, x), x, 1e-9));
                    for (std::size_t i = 0; i < n; ++i)
                        REQUIRE(approx_leq(max_plus, s.lower[i], x[i], 1e-9));
                    for (std::size_t k = 0; k < s.upper_support.size(); ++k)
                        REQUIRE(approx_leq(max_plus, x[s.upper_support[k]], s.upper_values[k],
                                           1e-9));
                }
            }
        });
    }
}

TEST_CASE("solver: irreducible fast path equals the general generator") {
    tsup::Rng rng(107);
    for (int iter = 0; iter < 200; ++iter) {
        const Semifield sf = tsup::kAllTags[rng.index(4)];
        const std::size_t n = 1 + rng.index(5);
        Matrix a = tsup::random_irreducible(rng, sf, n, -3, 3, 0.4);
        const Problem problem(a, tsup::random_vector(rng, sf, n, -2, 2, 0.3),
                              tsup::random_regular_vector(rng, sf, n, -2, 2));
        const SolutionSet s = solve(problem);
        const Matrix a_mu = a_mu_of(problem, s);
        REQUIRE(s.B == bounded_star(a_mu));          // the fast path itself
        REQUIRE(cone_generator(a_mu) == s.B);        // and the general route agrees exactly
    }
}

TEST_CASE("solver: B equals the star of A_mu also for reducible A") {
    tsup::Rng rng(109);
    for (int iter = 0; iter < 300; ++iter) {
        const Semifield sf = iter % 2 == 0 ? max_plus : max_times;
        const std::size_t n = 2 + rng.index(4);
        const Problem problem = random_solvable(rng, sf, n, -3, 3);
        const SolutionSet s = solve(problem);
        const Matrix a_mu = a_mu_of(problem, s);
        if (!approx_leq(sf, tr_func(a_mu), sf.one(), 1e-12)) continue;
        REQUIRE(tsup::approx_matrix_equal(s.B, bounded_star(a_mu), 1e-12));
    }
}

TEST_CASE("solver: zero q drops the upper bounds") {
    tsup::Rng rng(113);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 1 + rng.index(4);
        Matrix a = tsup::random_irreducible(rng, max_plus, n, -3, 3, 0.3);
        const Problem problem(a, tsup::random_vector(rng, max_plus, n, -2, 2, 0.2),
                              Vector::zeros(max_plus, n));
        const SolutionSet s = solve(problem);
        REQUIRE(s.upper_support.empty());
        REQUIRE(s.delta == kNegInf);
        REQUIRE(s.mu == s.lambda);
        for (int k = 0; k < 20; ++k) {
            const Vector x = sample_minimizer(s, tsup::random_inbox_u(rng, s));
            REQUIRE(approx_equal(objective(problem, x), s.mu, 1e-9));
        }
    }
}

TEST_CASE("solver: irregular q leaves indices outside J unbounded") {
    tsup::Rng rng(127);
    int kept = 0;
    while (kept < 50) {
        const std::size_t n = 2 + rng.index(3);
        Matrix a = tsup::random_matrix(rng, max_plus, n, n, -3, 3, 0.5);
        Vector p = tsup::random_vector(rng, max_plus, n, -2, 2, 0.2);
        Vector q = tsup::random_vector(rng, max_plus, n, -2, 2, 0.5);
        if (q.all_zero() || q.regular()) continue;
        Problem problem(std::move(a), std::move(p), std::move(q));
        std::optional<SolutionSet> s;
        try {
            s = solve(problem);
        } catch (const IllPosedError&) {
            continue;
        }
        ++kept;
        REQUIRE(!s->upper_support.empty()); // q != zero keeps J nonempty
        if (s->upper_support.size() == n) continue;

        // Push every unbounded coordinate of u sky-high; still a minimizer.
        Vector u = tsup::random_inbox_u(rng, *s);
        for (std::size_t i = 0; i < n; ++i) {
            double unused;
            if (!s->upper_bound(i, unused)) u[i] = 1e3;
        }
        const Vector x = sample_minimizer(*s, u);
        REQUIRE(approx_equal(objective(problem, x), s->mu, 1e-9));
    }
}
