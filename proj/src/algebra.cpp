#include "evolab/algebra.hpp"

#include <stdexcept>

namespace evolab {

EvolutionAlgebra::EvolutionAlgebra(PolyMat structure) : structure_(std::move(structure)) {
    dim_ = structure_.size();
    if (dim_ == 0) throw std::domain_error("EvolutionAlgebra: empty structure matrix");
    for (auto& row : structure_) {
        if (row.size() != dim_) throw std::domain_error("EvolutionAlgebra: matrix not square");
        for (auto& p : row)
            for (auto& v : p.variables()) parameters_.insert(v);
    }
}

EvolutionAlgebra EvolutionAlgebra::from_values(const GMat& values) {
    PolyMat m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        for (auto& v : values[i]) m[i].push_back(Polynomial::constant(v));
    return EvolutionAlgebra(std::move(m));
}

GaussianRational EvolutionAlgebra::value(std::size_t i, std::size_t j) const {
    return structure_[i][j].constant_value();
}

GMat EvolutionAlgebra::values() const {
    GMat m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m[i].push_back(value(i, j));
    return m;
}

Element zero_element(std::size_t n) { return Element(n); }

Element basis_element(std::size_t n, std::size_t i) {
    Element e(n);
    e.at(i) = GaussianRational(1);
    return e;
}

bool is_zero_element(const Element& x) {
    for (auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void require_concrete(const EvolutionAlgebra& E) {
    if (!E.concrete())
        throw std::domain_error("element arithmetic requires a concrete algebra");
}

} // namespace

Element multiply(const Element& x, const Element& y, const EvolutionAlgebra& E) {
    require_concrete(E);
    std::size_t n = E.dim();
    if (x.size() != n || y.size() != n)
        throw std::domain_error("multiply: coordinate length mismatch");
    Element r(n);
    for (std::size_t i = 0; i < n; ++i) {
        GaussianRational c = x[i] * y[i];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) r[k] += c * E.value(i, k);
    }
    return r;
}

Element right_power(const Element& x, unsigned k, const EvolutionAlgebra& E) {
    if (k < 1) throw std::domain_error("right_power: k must be positive");
    Element p = x;
    for (unsigned s = 1; s < k; ++s) p = multiply(p, x, E);
    return p;
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, {}); }

Subspace Subspace::full(std::size_t ambient) {
    GMat rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(basis_element(ambient, i));
    return Subspace(ambient, std::move(rows));
}

Subspace Subspace::span(std::size_t ambient, const GMat& vectors) {
    GMat rows;
    for (auto& v : vectors) {
        if (v.size() != ambient) throw std::domain_error("Subspace::span: bad vector length");
        if (!is_zero_element(v)) rows.push_back(v);
    }
    rref(rows);
    return Subspace(ambient, std::move(rows));
}

bool Subspace::contains(const Element& v) const {
    if (v.size() != ambient_) throw std::domain_error("Subspace::contains: dimension mismatch");
    // Reduce v against the echelon basis; membership iff it cancels to zero.
    Element w = v;
    for (auto& row : basis_) {
        std::size_t piv = 0;
        while (piv < ambient_ && row[piv].is_zero()) ++piv;
        if (piv == ambient_ || w[piv].is_zero()) continue;
        GaussianRational f = w[piv];
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * row[j];
    }
    return is_zero_element(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::domain_error("Subspace::sum: dimension mismatch");
    GMat rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, rows);
}

Subspace subspace_product(const Subspace& U, const Subspace& V, const EvolutionAlgebra& E) {
    if (U.ambient() != V.ambient() || U.ambient() != E.dim())
        throw std::domain_error("subspace_product: dimension mismatch");
    GMat products;
    for (auto& u : U.basis())
        for (auto& v : V.basis()) products.push_back(multiply(u, v, E));
    return Subspace::span(E.dim(), products);
}

Subspace lower_central(const EvolutionAlgebra& E, unsigned k) {
    if (k < 1) throw std::domain_error("lower_central: k must be positive");
    std::vector<Subspace> mem;
    mem.push_back(Subspace::full(E.dim())); // E^1
    for (unsigned s = 2; s <= k; ++s) {
        Subspace acc = Subspace::zero(E.dim());
        for (unsigned i = 1; i <= s - 1; ++i)
            acc = acc.sum(subspace_product(mem[i - 1], mem[s - i - 1], E));
        mem.push_back(acc);
    }
    return mem[k - 1];
}

std::vector<Subspace> right_series_chain(const EvolutionAlgebra& E) {
    std::vector<Subspace> chain;
    chain.push_back(Subspace::full(E.dim()));
    while (true) {
        Subspace next = subspace_product(chain.back(), Subspace::full(E.dim()), E);
        if (next == chain.back()) break; // stabilized (zero included)
        chain.push_back(next);
        if (next.is_zero()) break;
    }
    return chain;
}

Subspace right_series(const EvolutionAlgebra& E, unsigned k) {
    if (k < 1) throw std::domain_error("right_series: k must be positive");
    auto chain = right_series_chain(E);
    // Past the computed chain the sequence is constant.
    return k <= chain.size() ? chain[k - 1] : chain.back();
}

std::size_t annihilator_dim(const EvolutionAlgebra& E) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < E.dim(); ++j) {
        bool zero_row = true;
        for (std::size_t k = 0; k < E.dim(); ++k)
            if (!E.entry(j, k).is_zero()) zero_row = false;
        if (zero_row) ++count;
    }
    return count;
}

StarMatrix star_product(const PolyMat& A, const PolyMat& B) {
    std::size_t n = A.size();
    if (n < 2) throw std::domain_error("star_product: size must be at least 2");
    if (B.size() != n) throw std::domain_error("star_product: size mismatch");
    for (auto& row : A)
        if (row.size() != n) throw std::domain_error("star_product: A not square");
    for (auto& row : B)
        if (row.size() != n) throw std::domain_error("star_product: B not square");

    StarMatrix s;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s.pairs.emplace_back(i, j);
    for (auto& [i, j] : s.pairs) {
        std::vector<Polynomial> row;
        for (std::size_t k = 0; k < n; ++k) row.push_back(A[i][k] * B[j][k]);
        s.rows.push_back(std::move(row));
    }
    return s;
}

} // namespace evolab
