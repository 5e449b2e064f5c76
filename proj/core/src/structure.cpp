#include "tropt/structure.hpp"

#include <algorithm>
#include <queue>

namespace tropt {

namespace {

std::vector<std::vector<std::size_t>> adjacency(const Matrix& a) {
    const std::size_t n = a.rows();
    const Semifield sf = a.semifield();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!sf.is_zero(a(i, j))) adj[i].push_back(j);
    return adj;
}

// Kosaraju with iterative DFS. Returns the component id of each vertex.
std::vector<std::size_t> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t& component_count) {
    const std::size_t n = adj.size();
    std::vector<std::vector<std::size_t>> radj(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : adj[u]) radj[v].push_back(u);

    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack; // (vertex, next edge)
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[u].size()) {
                const std::size_t v = adj[u][next++];
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.emplace_back(v, 0);
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }

    std::vector<std::size_t> comp(n, n);
    component_count = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != n) continue;
        const std::size_t c = component_count++;
        std::vector<std::size_t> dfs{*it};
        comp[*it] = c;
        while (!dfs.empty()) {
            const std::size_t u = dfs.back();
            dfs.pop_back();
            for (std::size_t v : radj[u])
                if (comp[v] == n) {
                    comp[v] = c;
                    dfs.push_back(v);
                }
        }
    }
    return comp;
}

} // namespace

std::size_t NormalForm::block_offset(std::size_t b) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < b; ++i) off += block_sizes[i];
    return off;
}

NormalForm normal_form(const Matrix& a) {
    if (!a.square()) throw DimensionError("normal_form requires a square matrix");
    const std::size_t n = a.rows();
    const auto adj = adjacency(a);

    std::size_t s = 0;
    const auto comp = strongly_connected_components(adj, s);

    std::vector<std::vector<std::size_t>> members(s);
    for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);
    for (auto& m : members) std::sort(m.begin(), m.end());

    // Condensation: successors of a component must be placed before it, so
    // blocks above the diagonal stay zero. Kahn over reversed edges, with a
    // min-heap on the smallest original index for a deterministic order.
    std::vector<std::vector<std::size_t>> preds(s);
    std::vector<std::size_t> unplaced_successors(s, 0);
    {
        std::vector<std::vector<char>> edge(s, std::vector<char>(s, 0));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v : adj[u]) {
                const std::size_t cu = comp[u], cv = comp[v];
                if (cu != cv && !edge[cu][cv]) {
                    edge[cu][cv] = 1;
                    preds[cv].push_back(cu);
                    ++unplaced_successors[cu];
                }
            }
    }

    using HeapEntry = std::pair<std::size_t, std::size_t>; // (min original index, component)
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> ready;
    for (std::size_t c = 0; c < s; ++c)
        if (unplaced_successors[c] == 0) ready.emplace(members[c].front(), c);

    std::vector<std::size_t> block_order;
    block_order.reserve(s);
    while (!ready.empty()) {
        const auto [_, c] = ready.top();
        ready.pop();
        block_order.push_back(c);
        for (std::size_t p : preds[c])
            if (--unplaced_successors[p] == 0) ready.emplace(members[p].front(), p);
    }
    if (block_order.size() != s) throw InternalError("normal_form: condensation is not acyclic");

    std::vector<std::size_t> permutation;
    permutation.reserve(n);
    std::vector<std::size_t> block_sizes;
    block_sizes.reserve(s);
    for (std::size_t c : block_order) {
        block_sizes.push_back(members[c].size());
        permutation.insert(permutation.end(), members[c].begin(), members[c].end());
    }

    Matrix permuted = Matrix::zeros(a.semifield(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) permuted(i, j) = a(permutation[i], permutation[j]);

    return NormalForm{std::move(permutation), std::move(block_sizes), std::move(permuted)};
}

bool is_irreducible(const Matrix& a) {
    if (!a.square()) throw DimensionError("is_irreducible requires a square matrix");
    if (a.rows() == 1) return !a.semifield().is_zero(a(0, 0));
    std::size_t s = 0;
    strongly_connected_components(adjacency(a), s);
    return s == 1;
}

DTDecomposition dt_split(const NormalForm& nf) {
    const Matrix& m = nf.permuted;
    const std::size_t n = m.rows();
    Matrix d = Matrix::zeros(m.semifield(), n, n);
    Matrix t = Matrix::zeros(m.semifield(), n, n);

    std::size_t offset = 0;
    std::vector<std::size_t> block_of(n);
    for (std::size_t b = 0; b < nf.block_count(); ++b) {
        for (std::size_t k = 0; k < nf.block_sizes[b]; ++k) block_of[offset + k] = b;
        offset += nf.block_sizes[b];
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (block_of[i] == block_of[j])
                d(i, j) = m(i, j);
            else if (block_of[i] > block_of[j])
                t(i, j) = m(i, j);
        }
    return DTDecomposition{std::move(d), std::move(t)};
}

Matrix unpermute(const Matrix& m, const std::vector<std::size_t>& permutation) {
    if (!m.square() || m.rows() != permutation.size())
        throw DimensionError("unpermute: permutation length mismatch");
    Matrix out = Matrix::zeros(m.semifield(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(permutation[i], permutation[j]) = m(i, j);
    return out;
}

Vector unpermute(const Vector& x, const std::vector<std::size_t>& permutation) {
    if (x.size() != permutation.size())
        throw DimensionError("unpermute: permutation length mismatch");
    Vector out = Vector::zeros(x.semifield(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[permutation[i]] = x[i];
    return out;
}

} // namespace tropt
