#pragma once

/// Brute-force verifiers, kept independent of the closed-form code paths:
/// an exhaustive grid search over the objective (plus-tags, where the grid
/// lives in the additive carrier) and the spectral radius recovered by
/// enumerating elementary cycles. Correctness instruments, not performance
/// paths.

#include <cstddef>

#include "tropt/solver.hpp"

namespace tropt::oracle {

struct GridSpec {
    double lo;
    double hi;
    double step;
    std::size_t dims;

    /// Requires lo <= hi (a degenerate lo = hi grid evaluates one point),
    /// step > 0 and dims <= 4.
    GridSpec(double lo, double hi, double step, std::size_t dims);

    std::size_t points_per_dim() const;
};

struct GridResult {
    double value;
    Vector argmin; // lexicographically smallest among ties
};

/// Exhaustive evaluation of the objective on the grid; minimum taken in the
/// semifield order. Plus-tags only; CostGuardError above 10^7 points.
GridResult grid_minimize(const Problem& problem, const GridSpec& grid);

/// (+) over all elementary cycles of (cycle weight)^(1/length), found by
/// depth-first search rooted at the smallest vertex of each cycle. Zero for
/// an acyclic (or all-zero) matrix. CostGuardError for order > 8.
double cycle_mean_radius(const Matrix& a);

} // namespace tropt::oracle
