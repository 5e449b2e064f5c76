#pragma once

/// Eigenvalue machinery: the unique eigenvalue of an irreducible matrix and
/// the spectral radius of a reducible one,
///
///   lambda = (+)_{m=1..n} tr^{1/m}(A^m),
///
/// evaluated literally via explicit powers. The per-block values come from
/// applying the same formula to each diagonal block of the normal form.

#include <cstddef>
#include <vector>

#include "tropt/linalg.hpp"

namespace tropt {

struct BlockEigenvalue {
    std::size_t block; // index into NormalForm::block_sizes
    double lambda;
};

struct SpectralResult {
    double lambda; // (+) over the per-block eigenvalues
    std::vector<BlockEigenvalue> per_block;
};

SpectralResult spectral_radius(const Matrix& a);

/// A regular eigenvector of an irreducible matrix: a column j of
/// bounded_star(inv(lambda) (*) A) whose diagonal entry in the (+)-sum of
/// powers 1..n equals the identity. Preconditions: A irreducible,
/// lambda = spectral_radius(A).lambda, lambda nonzero.
Vector eigenvector_irreducible(const Matrix& a, double lambda);

} // namespace tropt
