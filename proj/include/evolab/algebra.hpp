#pragma once

#include <set>
#include <string>
#include <vector>

#include "evolab/linalg.hpp"
#include "evolab/polynomial.hpp"

namespace evolab {

using PolyMat = std::vector<std::vector<Polynomial>>;

/// Finite-dimensional evolution algebra: a natural basis e_1..e_n with
/// e_i·e_j = 0 for i != j and e_i^2 = sum_k structure[i][k]·e_k. Entries are
/// polynomials; the algebra is "concrete" when no entry mentions a variable.
class EvolutionAlgebra {
public:
    explicit EvolutionAlgebra(PolyMat structure);
    static EvolutionAlgebra from_values(const GMat& values);

    std::size_t dim() const { return dim_; }
    bool concrete() const { return parameters_.empty(); }
    const std::set<std::string>& parameters() const { return parameters_; }
    const PolyMat& structure() const { return structure_; }
    const Polynomial& entry(std::size_t i, std::size_t j) const { return structure_[i][j]; }

    /// Concrete entry value; throws on parameterized algebras.
    GaussianRational value(std::size_t i, std::size_t j) const;
    GMat values() const;

private:
    std::size_t dim_;
    PolyMat structure_;
    std::set<std::string> parameters_;
};

/// Coordinates of an element in the natural basis.
using Element = GVec;

Element zero_element(std::size_t n);
Element basis_element(std::size_t n, std::size_t i);
bool is_zero_element(const Element& x);

/// x·y = sum_i x_i y_i e_i^2. Commutative by construction. Requires a
/// concrete algebra.
Element multiply(const Element& x, const Element& y, const EvolutionAlgebra& E);

/// Right-normed power: x^[1] = x, x^[k+1] = x^[k]·x.
Element right_power(const Element& x, unsigned k, const EvolutionAlgebra& E);

/// Subspace of the coordinate space, held as a reduced-row-echelon basis.
/// Canonical form makes equality structural.
class Subspace {
public:
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const GMat& vectors);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const GMat& basis() const { return basis_; }

    bool contains(const Element& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Subspace(std::size_t ambient, GMat basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_ = 0;
    GMat basis_;
};

/// Row-echelon span of { u·v : u in basis(U), v in basis(V) }.
Subspace subspace_product(const Subspace& U, const Subspace& V, const EvolutionAlgebra& E);

/// E^1 = E, E^k = sum_{i=1}^{k-1} E^i·E^{k-i} (memoized recursion).
Subspace lower_central(const EvolutionAlgebra& E, unsigned k);

/// E^{<1>} = E, E^{<k+1>} = E^{<k>}·E.
Subspace right_series(const EvolutionAlgebra& E, unsigned k);

/// The decreasing chain E^{<1>}, E^{<2>}, ... up to (and including) the
/// first term that is zero or equal to its predecessor.
std::vector<Subspace> right_series_chain(const EvolutionAlgebra& E);

/// dim Ann(E) = number of basis vectors with e_j^2 = 0.
std::size_t annihilator_dim(const EvolutionAlgebra& E);

/// Cross-product coefficient matrix: one row per ordered pair (i,j), i < j,
/// in lexicographic order; entry (row (i,j), col k) = A[i][k]·B[j][k].
struct StarMatrix {
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // 0-based
    PolyMat rows;                                           // n(n-1)/2 x n
};

StarMatrix star_product(const PolyMat& A, const PolyMat& B);

} // namespace evolab
