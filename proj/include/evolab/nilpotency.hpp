#pragma once

#include <optional>

#include "evolab/algebra.hpp"

namespace evolab {

/// Digraph on {0..n-1} with an edge i -> j iff structure entry (i,j) is
/// nonzero; loops included. A nonzero cyclic product of structure constants
/// is exactly a directed cycle here.
struct StructureDigraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> out;

    static StructureDigraph of(const EvolutionAlgebra& E);

    bool acyclic() const;

    /// Topological order, smallest original index first among the ready
    /// vertices; nullopt when cyclic.
    std::optional<std::vector<std::size_t>> topological_order() const;
};

/// Brute-force oracle for the cyclic-product condition: enumerates every
/// tuple of pairwise-distinct indices i_1..i_k, k = 1..n, and tests
/// a(i1,i2)·a(i2,i3)···a(ik,i1) = 0. Exponential; meant for n <= ~8.
bool cyclic_products_zero(const EvolutionAlgebra& E);

/// Nil = right nilpotent = triangularizable; decided by digraph acyclicity.
bool is_nil(const EvolutionAlgebra& E);

struct Triangularization {
    std::vector<std::size_t> sigma; // new position -> original index
    GMat matrix;                    // matrix[i][j] = a(sigma[i], sigma[j]), strictly upper
};

std::optional<Triangularization> triangularize(const EvolutionAlgebra& E);

struct RightNilpotency {
    bool right_nilpotent = false;
    std::optional<unsigned> index; // minimal s with E^<s> = 0
};

RightNilpotency is_right_nilpotent(const EvolutionAlgebra& E);

struct NilElementVerdict {
    bool nil = false;
    std::optional<unsigned> witness_power; // minimal k with x^[k] = 0
};

/// Exact per-element decision: powers x^[k] = R_x^{k-1}(x) with linear R_x,
/// whose kernel chain stabilizes within dim steps.
NilElementVerdict is_nil_element(const Element& x, const EvolutionAlgebra& E);

bool has_nil_basis_vector(const EvolutionAlgebra& E);

/// F_i = sum over the (k-1)! permutations phi with phi(1) = i of the cyclic
/// products a(i,phi(2))·a(phi(2),phi(3))···a(phi(k),i). A must be k x k;
/// i is 0-based.
GaussianRational hamiltonian_cycle_sum(const GMat& A, std::size_t i, std::size_t k);

/// Variable name for the strictly-upper-triangular entry (i,j), 1-based.
std::string vanish_variable(std::size_t i, std::size_t j);

/// The polynomial system whose vanishing forces E^k = 0 for a strictly
/// upper triangular structure matrix; k in {3,4,5}. Variables a_ij, i < j;
/// structurally zero terms are dropped and duplicates removed.
std::vector<Polynomial> vanish_system(std::size_t n, unsigned k);

/// Evaluates vanish_system(n, k) at the entries of a concrete strictly
/// upper triangular algebra. Throws on non-triangular input.
bool satisfies_vanish(const EvolutionAlgebra& E, unsigned k);

} // namespace evolab
