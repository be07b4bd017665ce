#pragma once

#include <random>
#include <vector>

#include "evolab/algebra.hpp"
#include "evolab/blockiso.hpp"
#include "evolab/cli.hpp"
#include "evolab/parse.hpp"

namespace testutil {

using namespace evolab;

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, int max_num = 4, int max_den = 3) {
    return Rational(rand_int(rng, -max_num, max_num), rand_int(rng, 1, max_den));
}

inline GaussianRational rand_gaussian(Rng& rng) {
    // Mostly real values; imaginary parts appear in about a third of draws.
    Rational im = rand_int(rng, 0, 2) == 0 ? rand_rational(rng) : Rational(0);
    return {rand_rational(rng), im};
}

inline GaussianRational rand_nonzero_gaussian(Rng& rng) {
    while (true) {
        GaussianRational g = rand_gaussian(rng);
        if (!g.is_zero()) return g;
    }
}

inline GVec rand_vector(Rng& rng, std::size_t n) {
    GVec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rand_gaussian(rng));
    return v;
}

inline Monomial rand_monomial(Rng& rng, const std::vector<std::string>& vars,
                              unsigned max_deg_per_var = 3) {
    Monomial::Exps exps;
    for (auto& v : vars) {
        unsigned e = static_cast<unsigned>(rand_int(rng, 0, static_cast<int>(max_deg_per_var)));
        if (e) exps.emplace_back(v, e);
    }
    return Monomial::from_pairs(exps);
}

inline Polynomial rand_poly(Rng& rng, const std::vector<std::string>& vars,
                            unsigned max_deg_per_var = 2, int max_terms = 3) {
    Polynomial p;
    int terms = rand_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t)
        p += Polynomial::term(rand_monomial(rng, vars, max_deg_per_var), rand_gaussian(rng));
    return p;
}

// ---- algebra ensembles ----

inline EvolutionAlgebra dense_algebra(Rng& rng, std::size_t n) {
    GMat m(n);
    for (auto& row : m)
        for (std::size_t j = 0; j < n; ++j) row.push_back(rand_gaussian(rng));
    return EvolutionAlgebra::from_values(m);
}

inline EvolutionAlgebra sparse_algebra(Rng& rng, std::size_t n) {
    GMat m(n, GVec(n));
    for (auto& row : m)
        for (auto& v : row)
            if (rand_int(rng, 0, 3) == 0) v = rand_nonzero_gaussian(rng);
    return EvolutionAlgebra::from_values(m);
}

inline GMat strictly_upper_values(Rng& rng, std::size_t n, int nonzero_chance_in_4 = 2) {
    GMat m(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rand_int(rng, 0, 3) < nonzero_chance_in_4) m[i][j] = rand_nonzero_gaussian(rng);
    return m;
}

inline std::vector<std::size_t> rand_permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Simultaneous row/column relabeling: result[i][j] = m[p[i]][p[j]].
inline GMat conjugate_by_permutation(const GMat& m, const std::vector<std::size_t>& p) {
    std::size_t n = m.size();
    GMat r(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = m[p[i]][p[j]];
    return r;
}

inline EvolutionAlgebra permuted_triangular_algebra(Rng& rng, std::size_t n) {
    return EvolutionAlgebra::from_values(
        conjugate_by_permutation(strictly_upper_values(rng, n), rand_permutation(rng, n)));
}

// ---- 2-dimensional fixtures (the classification representatives) ----

inline EvolutionAlgebra algebra_lit(const std::string& literal) {
    return cli::load_algebra(literal);
}

inline EvolutionAlgebra E1() { return algebra_lit("[[1,0],[0,0]]"); }
inline EvolutionAlgebra E2() { return algebra_lit("[[1,0],[1,0]]"); }
inline EvolutionAlgebra E3() { return algebra_lit("[[1,1],[-1,-1]]"); }
inline EvolutionAlgebra E4() { return algebra_lit("[[0,1],[0,0]]"); }
inline EvolutionAlgebra E5_23() { return algebra_lit("[[1,2],[3,1]]"); }
inline EvolutionAlgebra E6_1() { return algebra_lit("[[0,1],[1,1]]"); }

// ---- block algebras and monomial isomorphisms ----

inline GMat rand_nondegenerate_block(Rng& rng) {
    while (true) {
        GMat b{{rand_gaussian(rng), rand_gaussian(rng)},
               {rand_gaussian(rng), rand_gaussian(rng)}};
        if (!det(b).is_zero()) return b;
    }
}

inline BlockAlgebra rand_block_algebra(Rng& rng, std::size_t blocks) {
    BlockAlgebra a;
    for (std::size_t k = 0; k < blocks; ++k) a.blocks.push_back(rand_nondegenerate_block(rng));
    return a;
}

inline MonomialIso rand_monomial_iso(Rng& rng, std::size_t n) {
    MonomialIso phi;
    phi.pi = rand_permutation(rng, n);
    for (std::size_t i = 0; i < n; ++i) phi.scalars.push_back(rand_nonzero_gaussian(rng));
    return phi;
}

// Monomial basis change applied directly to a structure matrix:
// result[i][j] = s_i^2 · m[p[i]][p[j]] / s_j.
inline GMat monomial_change(const GMat& m, const std::vector<std::size_t>& p, const GVec& s) {
    std::size_t n = m.size();
    GMat r(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = s[i] * s[i] * m[p[i]][p[j]] / s[j];
    return r;
}

} // namespace testutil
