#pragma once

/// Closed-form solution of the unconstrained extremal problem
///
///   minimize  x^- A x (+) x^- p (+) q^- x   over regular x,
///
/// where the minimum is taken in the semifield order. The exact minimum is
///
///   mu = lambda (+) delta,  delta = (q^- p)^{1/2},
///
/// with lambda the spectral radius of A, and the minimizers are exactly
/// x = B u for B = (D_mu* T_mu)* D_mu* built from A_mu = inv(mu) (*) A, with
/// u regular, u >= inv(mu) (*) p, and u_j <= mu (*) inv((q^- B)_j) on the
/// support J of the row vector q^- B. For regular q, J is everything; for
/// q = zero, J is empty and the upper bound disappears.

#include <cstddef>
#include <vector>

#include "tropt/linalg.hpp"

namespace tropt {

struct Problem {
    Matrix A;
    Vector p;
    Vector q;

    /// Validates square A and matching sizes/tags.
    Problem(Matrix a, Vector p, Vector q);

    Semifield semifield() const { return A.semifield(); }
    std::size_t size() const { return p.size(); }
};

struct SolutionSet {
    Semifield sf;
    double mu;     // the exact minimum, = lambda (+) delta
    double lambda; // spectral radius of A
    double delta;  // (q^- p)^{1/2}
    Matrix B;      // minimizer generator, original coordinates
    Vector lower;  // inv(mu) (*) p
    /// Support J of q^- B and the bounds mu (*) inv((q^- B)_j), aligned.
    std::vector<std::size_t> upper_support;
    std::vector<double> upper_values;

    /// Upper bound for index j, or the position in upper_support; returns
    /// false when j carries no upper bound.
    bool upper_bound(std::size_t j, double& bound) const;
};

/// Objective value x^- A x (+) x^- p (+) q^- x; DomainError unless x is
/// regular. The q term vanishes when q is the zero vector.
double objective(const Problem& problem, const Vector& x);

/// Solve the problem. Throws IllPosedError when mu is zero (which happens
/// iff lambda is zero and q^- p is zero).
SolutionSet solve(const Problem& problem);

/// B (*) u for a regular u inside the solution box; every such point
/// attains the minimum. DomainError when u violates the bounds.
Vector sample_minimizer(const SolutionSet& solution, const Vector& u);

/// True iff objective(problem, x) equals the minimum within 1e-9 relative.
bool is_minimizer(const Problem& problem, const SolutionSet& solution, const Vector& x);

} // namespace tropt
