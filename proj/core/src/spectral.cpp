#include "tropt/spectral.hpp"

#include "tropt/approx.hpp"
#include "tropt/structure.hpp"

namespace tropt {

namespace {

double radius_formula(const Matrix& a) {
    const Semifield sf = a.semifield();
    const std::size_t n = a.rows();
    double lambda = sf.zero();
    Matrix power = Matrix::identity(sf, n);
    for (std::size_t m = 1; m <= n; ++m) {
        power = multiply(power, a);
        const double t = trace(power);
        lambda = sf.add(lambda, sf.pow(t, 1.0 / static_cast<double>(m)));
    }
    return lambda;
}

} // namespace

SpectralResult spectral_radius(const Matrix& a) {
    if (!a.square()) throw DimensionError("spectral_radius requires a square matrix");

    SpectralResult result;
    result.lambda = radius_formula(a);

    const NormalForm nf = normal_form(a);
    result.per_block.reserve(nf.block_count());
    for (std::size_t b = 0; b < nf.block_count(); ++b) {
        const Matrix block = nf.permuted.diagonal_block(nf.block_offset(b), nf.block_sizes[b]);
        result.per_block.push_back({b, radius_formula(block)});
    }
    return result;
}

Vector eigenvector_irreducible(const Matrix& a, double lambda) {
    if (!a.square()) throw DimensionError("eigenvector_irreducible requires a square matrix");
    if (!is_irreducible(a)) throw DomainError("eigenvector_irreducible: matrix is reducible");
    const Semifield sf = a.semifield();
    if (sf.is_zero(lambda)) throw DomainError("eigenvector_irreducible: lambda is zero");
    if (lambda != spectral_radius(a).lambda)
        throw DomainError("eigenvector_irreducible: lambda is not the spectral radius");

    const std::size_t n = a.rows();
    const Matrix scaled = scale(sf.inv(lambda), a);
    const Matrix star = bounded_star(scaled);
    const Matrix closure = multiply(scaled, star); // (+)-sum of powers 1..n

    // The critical diagonal entries equal the identity exactly in real
    // arithmetic; pick the (+) -largest one and allow for roundoff from the
    // 1/m roots in lambda.
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (sf.lt(closure(best, best), closure(j, j))) best = j;
    if (!approx_equal(closure(best, best), sf.one(), 1e-9))
        throw InternalError("eigenvector_irreducible: no critical column found");

    return star.column(best);
}

} // namespace tropt
