#pragma once

#include <optional>

#include "evolab/algebra.hpp"

namespace evolab {

/// Evolution algebra of dimension 2n whose structure matrix is block
/// diagonal with 2x2 blocks (a_k, b_k; c_k, d_k).
struct BlockAlgebra {
    std::vector<GMat> blocks; // each 2x2

    std::size_t block_count() const { return blocks.size(); }
    std::size_t dim() const { return 2 * blocks.size(); }

    /// All block determinants nonzero (equivalently det of the full matrix).
    bool nondegenerate() const;

    GMat full_matrix() const;
    EvolutionAlgebra algebra() const;

    /// Reads a 2n x 2n matrix, checking the block-diagonal shape.
    static std::optional<BlockAlgebra> from_matrix(const GMat& m);
};

/// Monomial matrix: entry alpha_i at (i, pi(i)), zero elsewhere; all
/// alpha_i nonzero, so it is invertible. Represents the basis change
/// e'_i = alpha_i · e_{pi(i)}.
struct MonomialIso {
    std::vector<std::size_t> pi;        // 0-based permutation, row -> column
    std::vector<GaussianRational> scalars;

    std::size_t size() const { return pi.size(); }
    GMat matrix() const;

    static MonomialIso identity(std::size_t n);
    static std::optional<MonomialIso> from_matrix(const GMat& m);
};

/// Recognizes the monomial isomorphism hiding in M: monomial matrices are
/// returned directly; otherwise M qualifies iff it is invertible and kills
/// all cross products phi(e_i)phi(e_j), which for a nondegenerate block
/// algebra forces M to be monomial.
std::optional<MonomialIso> iso_class_of(const GMat& M, const BlockAlgebra& A);

/// Composition as matrices: matrix(compose(phi, psi)) = matrix(phi)·matrix(psi),
/// i.e. permutation i -> psi.pi[phi.pi[i]] and scalars alpha_i·beta_{phi.pi[i]}.
MonomialIso compose(const MonomialIso& phi, const MonomialIso& psi);

/// Structure matrix in the basis e'_i = alpha_i e_{pi(i)}, by the closed
/// form a'_ij = alpha_i^2 · a(pi(i), pi(j)) / alpha_j.
GMat transform(const BlockAlgebra& A, const MonomialIso& phi);

/// True iff pi maps every block pair {2m-1, 2m} onto some block pair.
bool blocks_preserved(const std::vector<std::size_t>& pi);

/// Literal reading of the adjacency chain "pi(i) in {pi(i-1) +- 1}" for
/// i = 2..2n (pi(0) is undefined, so i = 1 is skipped). Diagnostic only;
/// blocks_preserved is the authoritative criterion.
bool sb_literal_chain(const std::vector<std::size_t>& pi);

/// Computes transform(A, phi) and tests the 2x2-block-diagonal shape.
bool check_structure_preserved(const BlockAlgebra& A, const MonomialIso& phi);

/// For a symmetric 2x2 block (b = c): whether the transformed matrix is
/// symmetric again. Equals b·alpha^3 = b·delta^3 for the diagonal class and
/// b·beta^3 = b·gamma^3 for the antidiagonal one.
bool symmetric_classes(const GMat& block, const MonomialIso& phi);

} // namespace evolab
