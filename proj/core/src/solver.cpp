#include "tropt/solver.hpp"

#include <algorithm>

#include "tropt/approx.hpp"
#include "tropt/inequalities.hpp"
#include "tropt/spectral.hpp"
#include "tropt/structure.hpp"

namespace tropt {

Problem::Problem(Matrix a, Vector p_in, Vector q_in)
    : A(std::move(a)), p(std::move(p_in)), q(std::move(q_in)) {
    if (!A.square()) throw DimensionError("problem: A must be square");
    if (p.size() != A.rows() || q.size() != A.rows())
        throw DimensionError("problem: p and q must match the order of A");
    if (!(p.semifield() == A.semifield()) || !(q.semifield() == A.semifield()))
        throw DomainError("problem: A, p, q must share one semifield");
}

bool SolutionSet::upper_bound(std::size_t j, double& bound) const {
    const auto it = std::find(upper_support.begin(), upper_support.end(), j);
    if (it == upper_support.end()) return false;
    bound = upper_values[static_cast<std::size_t>(it - upper_support.begin())];
    return true;
}

double objective(const Problem& problem, const Vector& x) {
    if (!x.regular()) throw DomainError("objective is defined for regular x only");
    const Semifield sf = problem.semifield();
    const CoVector xc = conjugate(x);
    double value = sf.add(multiply(xc, multiply(problem.A, x)), multiply(xc, problem.p));
    if (!problem.q.all_zero()) value = sf.add(value, multiply(conjugate(problem.q), x));
    return value;
}

SolutionSet solve(const Problem& problem) {
    const Semifield sf = problem.semifield();
    const std::size_t n = problem.size();

    const double lambda = spectral_radius(problem.A).lambda;
    const double qp = problem.q.all_zero() ? sf.zero()
                                           : multiply(conjugate(problem.q), problem.p);
    const double delta = sf.pow(qp, 0.5);
    const double mu = sf.add(lambda, delta);
    if (sf.is_zero(mu))
        throw IllPosedError("mu = lambda (+) delta is zero; the minimum hypothesis fails");

    const Matrix a_mu = scale(sf.inv(mu), problem.A);
    // mu >= lambda forces Tr(A_mu) <= identity; a slack of 1e-9 absorbs the
    // roundoff of the 1/m roots when the bound is tight (mu = lambda).
    if (!approx_leq(sf, tr_func(a_mu), sf.one(), 1e-9))
        throw InternalError("solve: Tr(inv(mu) A) exceeds the identity");

    const Matrix b = is_irreducible(problem.A) ? bounded_star(a_mu) : cone_generator(a_mu);

    SolutionSet solution{sf, mu, lambda, delta, b, scale(sf.inv(mu), problem.p), {}, {}};

    if (!problem.q.all_zero()) {
        const CoVector row = multiply(conjugate(problem.q), b);
        for (std::size_t j = 0; j < n; ++j) {
            if (sf.is_zero(row[j])) continue;
            solution.upper_support.push_back(j);
            solution.upper_values.push_back(sf.mul(mu, sf.inv(row[j])));
        }
    }

    for (std::size_t k = 0; k < solution.upper_support.size(); ++k) {
        const double lo = solution.lower[solution.upper_support[k]];
        if (!approx_leq(sf, lo, solution.upper_values[k], 1e-9))
            throw InternalError("solve: empty solution box");
    }
    return solution;
}

Vector sample_minimizer(const SolutionSet& solution, const Vector& u) {
    if (u.size() != solution.lower.size()) throw DimensionError("sample_minimizer: length mismatch");
    if (!(u.semifield() == solution.sf)) throw DomainError("sample_minimizer: semifield mismatch");
    if (!u.regular()) throw DomainError("sample_minimizer: u must be regular");

    // Bound checks tolerate 1e-12 so box corners survive the rounding of
    // mu-scaled quantities.
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!approx_leq(solution.sf, solution.lower[i], u[i], 1e-12))
            throw DomainError("sample_minimizer: u is below the lower bound");
    for (std::size_t k = 0; k < solution.upper_support.size(); ++k)
        if (!approx_leq(solution.sf, u[solution.upper_support[k]], solution.upper_values[k], 1e-12))
            throw DomainError("sample_minimizer: u exceeds the upper bound");

    return multiply(solution.B, u);
}

bool is_minimizer(const Problem& problem, const SolutionSet& solution, const Vector& x) {
    return approx_equal(objective(problem, x), solution.mu, 1e-9);
}

} // namespace tropt
