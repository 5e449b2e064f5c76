#pragma once

/// Closed-form solvers for the two one-sided linear inequality problems:
///
///   A x <= d          largest solution x = (d^- A)^-, columns of zeros
///                     leaving the matching components unconstrained;
///   A x (+) b <= x    all regular solutions x = (D* T)* D* u for u >= b,
///                     which exist iff Tr(A) <= identity.

#include <cstddef>
#include <optional>
#include <vector>

#include "tropt/linalg.hpp"

namespace tropt {

struct UpperSolution {
    /// Entrywise maximum solution; entries at free indices are the raw
    /// formula value (zero) and carry no constraint.
    Vector bound;
    /// Column indices with no constraint (the zero columns of A).
    std::vector<std::size_t> free;

    bool is_free(std::size_t i) const;
};

struct ConeSolution {
    /// The matrix (D* T)* D*, in original coordinates. Every x = generator
    /// (*) u with regular u >= lower solves the inequality.
    Matrix generator;
    Vector lower;
};

/// Largest solution of A x <= d for a regular d; zero columns of A are
/// reported as free. Throws DomainError when d is not regular.
UpperSolution solve_upper(const Matrix& a, const Vector& d);

/// All regular solutions of A x (+) b <= x, or nullopt when Tr(A) exceeds
/// the identity and no regular solution exists. The Tr comparison is exact
/// in the semifield order. A need not be in normal form; the permutation is
/// handled internally and the generator is returned in original coordinates.
std::optional<ConeSolution> solve_fixed(const Matrix& a, const Vector& b);

/// The generator (D* T)* D* of a square matrix, in original coordinates.
/// Shared by solve_fixed and the extremal-problem solver.
Matrix cone_generator(const Matrix& a);

} // namespace tropt
