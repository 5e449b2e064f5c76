#include "tropt/oracle.hpp"

#include <cmath>
#include <vector>

namespace tropt::oracle {

namespace {

// Direct objective evaluation on raw entries; deliberately shares nothing
// with the matrix/conjugate machinery it is used to check.
double evaluate(const Problem& problem, const std::vector<double>& x) {
    const Semifield sf = problem.semifield();
    const bool max_like = sf.max_like();
    const double zero = sf.zero();
    const std::size_t n = x.size();

    double best = zero;
    const auto account = [&](double term) {
        best = max_like ? std::fmax(best, term) : std::fmin(best, term);
    };

    const Matrix& a = problem.A;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double aij = a(i, j);
            if (aij != zero) account(aij - x[i] + x[j]);
        }
    for (std::size_t i = 0; i < n; ++i)
        if (problem.p[i] != zero) account(problem.p[i] - x[i]);
    for (std::size_t i = 0; i < n; ++i)
        if (problem.q[i] != zero) account(x[i] - problem.q[i]);
    return best;
}

} // namespace

GridSpec::GridSpec(double lo_in, double hi_in, double step_in, std::size_t dims_in)
    : lo(lo_in), hi(hi_in), step(step_in), dims(dims_in) {
    if (!(lo <= hi) || !(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("grid: need finite lo <= hi and step > 0");
    if (dims == 0 || dims > 4) throw DomainError("grid: dims must be between 1 and 4");
}

std::size_t GridSpec::points_per_dim() const {
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

GridResult grid_minimize(const Problem& problem, const GridSpec& grid) {
    const Semifield sf = problem.semifield();
    if (!sf.plus_like()) throw DomainError("grid_minimize supports the plus-tags only");
    if (grid.dims != problem.size()) throw DimensionError("grid dims must equal the problem order");

    const std::size_t per_dim = grid.points_per_dim();
    double total = 1.0;
    for (std::size_t d = 0; d < grid.dims; ++d) total *= static_cast<double>(per_dim);
    if (total > 1e7) throw CostGuardError("grid exceeds 10^7 points");

    std::vector<std::size_t> index(grid.dims, 0);
    std::vector<double> x(grid.dims, grid.lo);
    std::vector<double> coordinate(per_dim);
    for (std::size_t k = 0; k < per_dim; ++k)
        coordinate[k] = grid.lo + static_cast<double>(k) * grid.step;

    double best_value = 0.0;
    std::vector<double> best_x;
    bool has_best = false;

    for (;;) {
        const double value = evaluate(problem, x);
        // Strict improvement keeps the first (lexicographically smallest) argmin.
        if (!has_best || sf.lt(value, best_value)) {
            best_value = value;
            best_x = x;
            has_best = true;
        }
        std::size_t d = grid.dims;
        while (d > 0) {
            --d;
            if (++index[d] < per_dim) {
                x[d] = coordinate[index[d]];
                break;
            }
            index[d] = 0;
            x[d] = coordinate[0];
            if (d == 0) return GridResult{best_value, Vector(sf, best_x)};
        }
    }
}

double cycle_mean_radius(const Matrix& a) {
    if (!a.square()) throw DimensionError("cycle_mean_radius requires a square matrix");
    const std::size_t n = a.rows();
    if (n > 8) throw CostGuardError("cycle enumeration is limited to order 8");
    const Semifield sf = a.semifield();

    double best = sf.zero();
    std::vector<char> on_path(n, 0);

    // Simple paths from root over vertices > root; an arc back to the root
    // closes an elementary cycle whose smallest vertex is the root.
    auto extend = [&](auto&& self, std::size_t root, std::size_t u, double weight,
                      std::size_t length) -> void {
        for (std::size_t v = root; v < n; ++v) {
            const double arc = a(u, v);
            if (sf.is_zero(arc)) continue;
            if (v == root) {
                const double cycle = sf.mul(weight, arc);
                best = sf.add(best, sf.pow(cycle, 1.0 / static_cast<double>(length + 1)));
            } else if (!on_path[v]) {
                on_path[v] = 1;
                self(self, root, v, sf.mul(weight, arc), length + 1);
                on_path[v] = 0;
            }
        }
    };

    for (std::size_t root = 0; root < n; ++root) {
        on_path[root] = 1;
        extend(extend, root, root, sf.one(), 0);
        on_path[root] = 0;
    }
    return best;
}

} // namespace tropt::oracle
