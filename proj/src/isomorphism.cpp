#include "evolab/isomorphism.hpp"

#include <map>
#include <stdexcept>

namespace evolab {

namespace {

PolyMat transpose(const PolyMat& m) {
    std::size_t n = m.size();
    PolyMat t(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
    return t;
}

Polynomial det_rec(const PolyMat& m, std::vector<std::size_t>& cols, std::size_t row,
                   std::map<std::vector<std::size_t>, Polynomial>& memo) {
    if (cols.empty()) return Polynomial::constant(GaussianRational(1));
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Polynomial acc;
    for (std::size_t p = 0; p < cols.size(); ++p) {
        std::size_t c = cols[p];
        if (m[row][c].is_zero()) continue;
        std::vector<std::size_t> rest = cols;
        rest.erase(rest.begin() + p);
        Polynomial sub = m[row][c] * det_rec(m, rest, row + 1, memo);
        if (p % 2 == 0) acc += sub;
        else acc -= sub;
    }
    memo.emplace(cols, acc);
    return acc;
}

} // namespace

Polynomial poly_det(const PolyMat& m) {
    std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::domain_error("poly_det: matrix not square");
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    std::map<std::vector<std::size_t>, Polynomial> memo;
    return det_rec(m, cols, 0, memo);
}

namespace {

std::string fresh_prefix(const std::set<std::string>& taken, std::string base,
                         const std::vector<std::string>& candidates) {
    while (true) {
        bool clash = false;
        for (auto& c : candidates)
            if (taken.count(base + c)) clash = true;
        if (!clash) return base;
        base += base.back();
    }
}

} // namespace

IsoSystem build_iso_system(const EvolutionAlgebra& P, const EvolutionAlgebra& Q, IsoMode mode) {
    std::size_t n = P.dim();
    if (Q.dim() != n) throw std::domain_error("build_iso_system: dimension mismatch");

    std::set<std::string> params = P.parameters();
    params.insert(Q.parameters().begin(), Q.parameters().end());

    auto cell = [n](std::size_t i, std::size_t j) {
        std::string s = std::to_string(i + 1);
        if (n > 9) s += "_";
        return s + std::to_string(j + 1);
    };
    std::vector<std::string> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cells.push_back(cell(i, j));
    std::string tp = fresh_prefix(params, "t", cells);
    std::string y = fresh_prefix(params, "y", {""});

    IsoSystem sys;
    sys.mode = mode;
    sys.y_name = y;
    sys.t_names.assign(n, std::vector<std::string>(n));
    PolyMat T(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sys.t_names[i][j] = tp + cell(i, j);
            sys.variables.push_back(sys.t_names[i][j]);
            T[i][j] = Polynomial::variable(sys.t_names[i][j]);
        }
    sys.variables.push_back(y);
    for (auto& p : params) sys.variables.push_back(p);

    // Squares: phi(e_i)^2 = phi(e_i^2), i.e. (T o T)·Q - P·T = 0.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            Polynomial e;
            for (std::size_t k = 0; k < n; ++k) {
                e += T[i][k] * T[i][k] * Q.entry(k, l);
                e -= P.entry(i, k) * T[k][l];
            }
            sys.equations.push_back(std::move(e));
        }

    // Cross: phi(e_i)·phi(e_j) = 0 for i < j, via the star product of the
    // unknown matrix (transposed in appendix-literal mode) with itself.
    const PolyMat M = mode == IsoMode::derived ? T : transpose(T);
    StarMatrix star = star_product(M, M);
    for (auto& row : star.rows)
        for (std::size_t l = 0; l < n; ++l) {
            Polynomial e;
            for (std::size_t k = 0; k < n; ++k) e += row[k] * Q.entry(k, l);
            sys.equations.push_back(std::move(e));
        }

    // Invertibility via Rabinowitsch: det(T)·y - 1 = 0.
    sys.equations.push_back(poly_det(T) * Polynomial::variable(y) -
                            Polynomial::constant(GaussianRational(1)));
    return sys;
}

IsoVerdict decide_isomorphic(const EvolutionAlgebra& P, const EvolutionAlgebra& Q,
                             IsoMode mode) {
    IsoSystem sys = build_iso_system(P, Q, mode);
    GroebnerBasis basis = buchberger(sys.equations, Polynomial::default_order());
    IsoVerdict v;
    v.verdict = contains_one(basis) ? IsoVerdictKind::NotIsomorphic
                                    : IsoVerdictKind::IsomorphicSomewhere;
    v.basis_size = basis.generators.size();
    v.parameterized = !P.concrete() || !Q.concrete();
    return v;
}

bool verify_isomorphism(const GMat& T, const EvolutionAlgebra& P, const EvolutionAlgebra& Q) {
    std::size_t n = P.dim();
    if (Q.dim() != n || T.size() != n)
        throw std::domain_error("verify_isomorphism: dimension mismatch");
    for (auto& row : T)
        if (row.size() != n) throw std::domain_error("verify_isomorphism: T not square");
    if (!P.concrete() || !Q.concrete())
        throw std::domain_error("verify_isomorphism: algebras must be concrete");

    if (det(T).is_zero()) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            GaussianRational e;
            for (std::size_t k = 0; k < n; ++k) {
                e += T[i][k] * T[i][k] * Q.value(k, l);
                e -= P.value(i, k) * T[k][l];
            }
            if (!e.is_zero()) return false;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                GaussianRational e;
                for (std::size_t k = 0; k < n; ++k) e += T[i][k] * T[j][k] * Q.value(k, l);
                if (!e.is_zero()) return false;
            }
    return true;
}

} // namespace evolab
