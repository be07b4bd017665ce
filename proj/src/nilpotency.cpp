#include "evolab/nilpotency.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace evolab {

StructureDigraph StructureDigraph::of(const EvolutionAlgebra& E) {
    if (!E.concrete()) throw std::domain_error("StructureDigraph: algebra not concrete");
    StructureDigraph g;
    g.n = E.dim();
    g.out.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            if (!E.value(i, j).is_zero()) g.out[i].push_back(j);
    return g;
}

std::optional<std::vector<std::size_t>> StructureDigraph::topological_order() const {
    std::vector<std::size_t> indeg(n, 0);
    for (auto& edges : out)
        for (std::size_t j : edges) ++indeg[j];

    // Kahn's algorithm; the ready set is scanned smallest-index-first so the
    // order is deterministic. A loop keeps its own vertex unready forever,
    // so loops are detected like any other cycle.
    std::vector<bool> done(n, false);
    std::vector<std::size_t> order;
    while (order.size() < n) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!done[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        }
        if (pick == n) return std::nullopt;
        done[pick] = true;
        order.push_back(pick);
        for (std::size_t j : out[pick]) --indeg[j];
    }
    return order;
}

bool StructureDigraph::acyclic() const { return topological_order().has_value(); }

bool is_nil(const EvolutionAlgebra& E) { return StructureDigraph::of(E).acyclic(); }

namespace {

// Full product over the tuple (no shortcuts): the literal oracle.
GaussianRational tuple_product(const GMat& a, const std::vector<std::size_t>& tuple) {
    GaussianRational prod(1);
    for (std::size_t p = 0; p < tuple.size(); ++p)
        prod *= a[tuple[p]][tuple[(p + 1) % tuple.size()]];
    return prod;
}

bool tuples_vanish(const GMat& a, std::vector<std::size_t>& tuple, std::vector<bool>& used,
                   std::size_t k) {
    if (tuple.size() == k) return tuple_product(a, tuple).is_zero();
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (used[v]) continue;
        used[v] = true;
        tuple.push_back(v);
        bool ok = tuples_vanish(a, tuple, used, k);
        tuple.pop_back();
        used[v] = false;
        if (!ok) return false;
    }
    return true;
}

} // namespace

bool cyclic_products_zero(const EvolutionAlgebra& E) {
    GMat a = E.values();
    std::size_t n = E.dim();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> tuple;
        std::vector<bool> used(n, false);
        if (!tuples_vanish(a, tuple, used, k)) return false;
    }
    return true;
}

std::optional<Triangularization> triangularize(const EvolutionAlgebra& E) {
    auto order = StructureDigraph::of(E).topological_order();
    if (!order) return std::nullopt;
    std::size_t n = E.dim();
    Triangularization t;
    t.sigma = *order;
    t.matrix.assign(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.matrix[i][j] = E.value(t.sigma[i], t.sigma[j]);
    return t;
}

RightNilpotency is_right_nilpotent(const EvolutionAlgebra& E) {
    auto chain = right_series_chain(E);
    if (chain.back().is_zero())
        return {true, static_cast<unsigned>(chain.size())};
    return {false, std::nullopt};
}

NilElementVerdict is_nil_element(const Element& x, const EvolutionAlgebra& E) {
    if (is_zero_element(x)) return {true, 1};
    std::size_t n = E.dim();
    Element p = x;
    for (unsigned k = 2; k <= n + 1; ++k) {
        p = multiply(p, x, E);
        if (is_zero_element(p)) return {true, k};
    }
    // x^[n+1] = R_x^n(x) != 0: the generalized kernel of R_x has stabilized,
    // so no later power vanishes.
    return {false, std::nullopt};
}

bool has_nil_basis_vector(const EvolutionAlgebra& E) {
    for (std::size_t i = 0; i < E.dim(); ++i)
        if (is_nil_element(basis_element(E.dim(), i), E).nil) return true;
    return false;
}

GaussianRational hamiltonian_cycle_sum(const GMat& A, std::size_t i, std::size_t k) {
    if (k < 2 || A.size() != k || i >= k)
        throw std::domain_error("hamiltonian_cycle_sum: bad arguments");
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < k; ++v)
        if (v != i) rest.push_back(v);

    GaussianRational sum;
    do {
        GaussianRational prod = A[i][rest[0]];
        for (std::size_t p = 0; p + 1 < rest.size(); ++p) prod *= A[rest[p]][rest[p + 1]];
        prod *= A[rest.back()][i];
        sum += prod;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return sum;
}

std::string vanish_variable(std::size_t i, std::size_t j) {
    if (i <= 9 && j <= 9) return "a" + std::to_string(i) + std::to_string(j);
    return "a" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

// a_ij as a polynomial: the declared variable above the diagonal, zero
// elsewhere (the matrix is strictly upper triangular).
Polynomial tri_entry(std::size_t i, std::size_t j) {
    if (i < j) return Polynomial::variable(vanish_variable(i, j));
    return Polynomial();
}

void push_unique(std::vector<Polynomial>& out, std::set<std::string>& seen, Polynomial p) {
    if (p.is_zero()) return;
    if (seen.insert(p.to_string()).second) out.push_back(std::move(p));
}

} // namespace

std::vector<Polynomial> vanish_system(std::size_t n, unsigned k) {
    if (n < 2) throw std::domain_error("vanish_system: n must be at least 2");
    if (k < 3 || k > 5) throw std::domain_error("vanish_system: k must be 3, 4 or 5");

    std::vector<Polynomial> out;
    std::set<std::string> seen;

    if (k == 3) {
        // a_ij·a_js for j >= i+1, s >= j+1.
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                for (std::size_t s = j + 1; s <= n; ++s)
                    push_unique(out, seen, tri_entry(i, j) * tri_entry(j, s));
        return out;
    }

    if (k == 4) {
        // sum_{u=j+1}^{t-1} a_iu·a_ju·a_ut for j <= i, t >= j+2.
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= i; ++j)
                for (std::size_t t = j + 2; t <= n; ++t) {
                    Polynomial sum;
                    for (std::size_t u = j + 1; u < t; ++u)
                        sum += tri_entry(i, u) * tri_entry(j, u) * tri_entry(u, t);
                    push_unique(out, seen, sum);
                }
        // a_ij·a_js·a_st along strict chains.
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                for (std::size_t s = j + 1; s <= n; ++s)
                    for (std::size_t t = s + 1; t <= n; ++t)
                        push_unique(out, seen,
                                    tri_entry(i, j) * tri_entry(j, s) * tri_entry(s, t));
        return out;
    }

    // k == 5
    // sum_{u=j+1}^{s-1} a_iu·a_ju·a_us·a_st for j <= i, s >= j+2, t >= s+1.
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            for (std::size_t s = j + 2; s <= n; ++s)
                for (std::size_t t = s + 1; t <= n; ++t) {
                    Polynomial sum;
                    for (std::size_t u = j + 1; u < s; ++u)
                        sum += tri_entry(i, u) * tri_entry(j, u) * tri_entry(u, s) *
                               tri_entry(s, t);
                    push_unique(out, seen, sum);
                }
    // a_ij·(sum_{t=s+1}^{u-1} a_jt·a_st·a_tu) for j >= i+1, s >= j, u >= s+2.
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t s = j; s <= n; ++s)
                for (std::size_t u = s + 2; u <= n; ++u) {
                    Polynomial sum;
                    for (std::size_t t = s + 1; t < u; ++t)
                        sum += tri_entry(j, t) * tri_entry(s, t) * tri_entry(t, u);
                    push_unique(out, seen, tri_entry(i, j) * sum);
                }
    // a_ij·a_js·a_sv·a_vu along strict chains.
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t s = j + 1; s <= n; ++s)
                for (std::size_t v = s + 1; v <= n; ++v)
                    for (std::size_t u = v + 1; u <= n; ++u)
                        push_unique(out, seen,
                                    tri_entry(i, j) * tri_entry(j, s) * tri_entry(s, v) *
                                        tri_entry(v, u));
    return out;
}

bool satisfies_vanish(const EvolutionAlgebra& E, unsigned k) {
    if (!E.concrete()) throw std::domain_error("satisfies_vanish: algebra not concrete");
    std::size_t n = E.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!E.value(i, j).is_zero())
                throw std::domain_error("satisfies_vanish: matrix not strictly upper triangular");

    std::map<std::string, GaussianRational> values;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            values[vanish_variable(i, j)] = E.value(i - 1, j - 1);

    for (auto& p : vanish_system(n, k))
        if (!p.evaluate(values).is_zero()) return false;
    return true;
}

} // namespace evolab
