#include "evolab/blockiso.hpp"

#include <stdexcept>

namespace evolab {

bool BlockAlgebra::nondegenerate() const {
    for (auto& b : blocks)
        if (det(b).is_zero()) return false;
    return !blocks.empty();
}

GMat BlockAlgebra::full_matrix() const {
    std::size_t n = dim();
    GMat m(n, GVec(n));
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m[2 * k + i][2 * k + j] = blocks[k][i][j];
    return m;
}

EvolutionAlgebra BlockAlgebra::algebra() const {
    return EvolutionAlgebra::from_values(full_matrix());
}

std::optional<BlockAlgebra> BlockAlgebra::from_matrix(const GMat& m) {
    std::size_t n = m.size();
    if (n == 0 || n % 2 != 0) return std::nullopt;
    for (auto& row : m)
        if (row.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i / 2 != j / 2 && !m[i][j].is_zero()) return std::nullopt;
    BlockAlgebra a;
    for (std::size_t k = 0; k < n / 2; ++k)
        a.blocks.push_back({{m[2 * k][2 * k], m[2 * k][2 * k + 1]},
                            {m[2 * k + 1][2 * k], m[2 * k + 1][2 * k + 1]}});
    return a;
}

GMat MonomialIso::matrix() const {
    std::size_t n = size();
    GMat m(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][pi[i]] = scalars[i];
    return m;
}

MonomialIso MonomialIso::identity(std::size_t n) {
    MonomialIso phi;
    for (std::size_t i = 0; i < n; ++i) {
        phi.pi.push_back(i);
        phi.scalars.emplace_back(1);
    }
    return phi;
}

std::optional<MonomialIso> MonomialIso::from_matrix(const GMat& m) {
    std::size_t n = m.size();
    if (n == 0) return std::nullopt;
    MonomialIso phi;
    std::vector<bool> col_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) return std::nullopt;
        std::size_t hits = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!m[i][j].is_zero()) {
                ++hits;
                col = j;
            }
        if (hits != 1 || col_used[col]) return std::nullopt;
        col_used[col] = true;
        phi.pi.push_back(col);
        phi.scalars.push_back(m[i][col]);
    }
    return phi;
}

namespace {

void require_sizes(const BlockAlgebra& A, const MonomialIso& phi) {
    if (phi.size() != A.dim()) throw std::domain_error("size mismatch with block algebra");
}

// Eq-(111)-style cross conditions for rows i != j against every block.
bool cross_conditions_hold(const GMat& M, const BlockAlgebra& A) {
    std::size_t n2 = A.dim();
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = i + 1; j < n2; ++j)
            for (std::size_t k = 0; k < A.block_count(); ++k) {
                GaussianRational p = M[i][2 * k] * M[j][2 * k];
                GaussianRational q = M[i][2 * k + 1] * M[j][2 * k + 1];
                const GMat& b = A.blocks[k];
                if (!(p * b[0][0] + q * b[1][0]).is_zero()) return false;
                if (!(p * b[0][1] + q * b[1][1]).is_zero()) return false;
            }
    return true;
}

} // namespace

std::optional<MonomialIso> iso_class_of(const GMat& M, const BlockAlgebra& A) {
    if (M.size() != A.dim()) return std::nullopt;
    if (auto phi = MonomialIso::from_matrix(M)) return phi;
    for (auto& row : M)
        if (row.size() != A.dim()) return std::nullopt;
    if (!is_invertible(M) || !cross_conditions_hold(M, A)) return std::nullopt;
    // Invertible and cross-compatible implies monomial when A is
    // nondegenerate; reaching this point means A was degenerate.
    return MonomialIso::from_matrix(M);
}

MonomialIso compose(const MonomialIso& phi, const MonomialIso& psi) {
    std::size_t n = phi.size();
    if (psi.size() != n) throw std::domain_error("compose: size mismatch");
    MonomialIso r;
    for (std::size_t i = 0; i < n; ++i) {
        r.pi.push_back(psi.pi[phi.pi[i]]);
        r.scalars.push_back(phi.scalars[i] * psi.scalars[phi.pi[i]]);
    }
    return r;
}

GMat transform(const BlockAlgebra& A, const MonomialIso& phi) {
    require_sizes(A, phi);
    GMat a = A.full_matrix();
    std::size_t n = A.dim();
    GMat r(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r[i][j] = phi.scalars[i] * phi.scalars[i] * a[phi.pi[i]][phi.pi[j]] / phi.scalars[j];
    return r;
}

bool blocks_preserved(const std::vector<std::size_t>& pi) {
    if (pi.size() % 2 != 0) return false;
    for (std::size_t m = 0; m + 1 < pi.size(); m += 2) {
        std::size_t lo = std::min(pi[m], pi[m + 1]);
        std::size_t hi = std::max(pi[m], pi[m + 1]);
        if (lo % 2 != 0 || hi != lo + 1) return false;
    }
    return true;
}

bool sb_literal_chain(const std::vector<std::size_t>& pi) {
    for (std::size_t i = 1; i < pi.size(); ++i) {
        std::size_t prev = pi[i - 1], cur = pi[i];
        if (cur != prev + 1 && (prev == 0 || cur != prev - 1)) return false;
    }
    return true;
}

bool check_structure_preserved(const BlockAlgebra& A, const MonomialIso& phi) {
    GMat t = transform(A, phi);
    return BlockAlgebra::from_matrix(t).has_value();
}

bool symmetric_classes(const GMat& block, const MonomialIso& phi) {
    if (block.size() != 2 || block[0].size() != 2 || block[1].size() != 2)
        throw std::domain_error("symmetric_classes: block must be 2x2");
    if (!(block[0][1] == block[1][0]))
        throw std::domain_error("symmetric_classes: block must be symmetric");
    if (phi.size() != 2) throw std::domain_error("symmetric_classes: phi must have size 2");
    BlockAlgebra A{{block}};
    GMat t = transform(A, phi);
    return t[0][1] == t[1][0];
}

} // namespace evolab
