#include "tropt/inequalities.hpp"

#include <algorithm>

#include "tropt/structure.hpp"

namespace tropt {

bool UpperSolution::is_free(std::size_t i) const {
    return std::find(free.begin(), free.end(), i) != free.end();
}

UpperSolution solve_upper(const Matrix& a, const Vector& d) {
    if (a.rows() != d.size()) throw DimensionError("solve_upper: row count must match d");
    if (!d.regular()) throw DomainError("solve_upper: d must be regular");

    // (d^- A) has a zero entry exactly at the zero columns of A, so the
    // conjugate formula and the free set fall out of one pass.
    const CoVector row = multiply(conjugate(d), a);
    return UpperSolution{conjugate(row), [&] {
                             std::vector<std::size_t> free;
                             const Semifield sf = a.semifield();
                             for (std::size_t j = 0; j < row.size(); ++j)
                                 if (sf.is_zero(row[j])) free.push_back(j);
                             return free;
                         }()};
}

Matrix cone_generator(const Matrix& a) {
    if (!a.square()) throw DimensionError("cone_generator requires a square matrix");
    const NormalForm nf = normal_form(a);
    const auto [d, t] = dt_split(nf);
    const Matrix d_star = bounded_star(d);
    const Matrix generator = multiply(bounded_star(multiply(d_star, t)), d_star);
    return unpermute(generator, nf.permutation);
}

std::optional<ConeSolution> solve_fixed(const Matrix& a, const Vector& b) {
    if (!a.square()) throw DimensionError("solve_fixed requires a square matrix");
    if (a.rows() != b.size()) throw DimensionError("solve_fixed: b length must match A");

    const Semifield sf = a.semifield();
    if (!sf.leq(tr_func(a), sf.one())) return std::nullopt;
    return ConeSolution{cone_generator(a), b};
}

} // namespace tropt
