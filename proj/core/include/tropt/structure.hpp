#pragma once

/// Reducibility analysis. A square matrix is permuted (same permutation on
/// rows and columns) into block lower-triangular form whose diagonal blocks
/// are irreducible or zero, by condensing the strongly connected components
/// of the digraph with an arc i -> j wherever a_ij is nonzero.

#include <cstddef>
#include <vector>

#include "tropt/linalg.hpp"

namespace tropt {

struct NormalForm {
    /// permutation[k] is the original index placed at position k, so
    /// permuted(i, j) = A(permutation[i], permutation[j]).
    std::vector<std::size_t> permutation;
    /// Sizes n_1, ..., n_s of the diagonal blocks, in permuted order.
    std::vector<std::size_t> block_sizes;
    Matrix permuted;

    std::size_t block_count() const { return block_sizes.size(); }
    /// Row/column offset of block b within `permuted`.
    std::size_t block_offset(std::size_t b) const;
};

struct DTDecomposition {
    Matrix diagonal;   // D: diagonal blocks, zero elsewhere
    Matrix triangular; // T: strictly-below blocks, zero elsewhere
};

/// Block lower-triangular normal form. Blocks are ordered so that every
/// arc of the condensation points from a later block to an earlier one
/// (predecessors below); ties are broken by the smallest original index in
/// each component, and indices inside a block keep ascending original order.
NormalForm normal_form(const Matrix& a);

/// True iff the associated digraph is strongly connected. A 1x1 matrix is
/// irreducible iff its entry is nonzero.
bool is_irreducible(const Matrix& a);

/// Split a normal form into D (+) T.
DTDecomposition dt_split(const NormalForm& nf);

/// Map a matrix computed in permuted coordinates back to the original ones:
/// result(perm[i], perm[j]) = m(i, j).
Matrix unpermute(const Matrix& m, const std::vector<std::size_t>& permutation);

/// Map a vector computed in permuted coordinates back to the original ones.
Vector unpermute(const Vector& x, const std::vector<std::size_t>& permutation);

} // namespace tropt
