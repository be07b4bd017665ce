#pragma once

#include <optional>
#include <string>
#include <utility>

#include "evolab/algebra.hpp"

namespace evolab {

enum class ClassTag { Abelian, E1, E2, E3, E4, E5, E6 };

std::string to_string(ClassTag tag);

/// Isomorphism class of a 2-dimensional evolution algebra over Q(i).
/// E5 carries the unordered parameter pair {a2, a3} (sorted lexicographically
/// on (re, im)); E6 carries the cubic invariant a4^3, which removes the
/// cube-root ambiguity of the display parameter.
struct ClassLabel {
    ClassTag tag = ClassTag::Abelian;
    std::optional<std::pair<GaussianRational, GaussianRational>> e5_pair;
    std::optional<GaussianRational> e6_invariant;

    friend bool operator==(const ClassLabel& a, const ClassLabel& b) = default;
};

/// Exact classification of a concrete 2-dimensional algebra. Never leaves
/// Q(i): the classes that the reference normal forms reach through square or
/// cube roots are recognized through root-free rational invariants instead.
ClassLabel classify_dim2(const EvolutionAlgebra& E);

/// Two E6 cubic invariants describe the same class iff they are equal (the
/// cube-root-of-unity freedom is already quotiented out by cubing).
bool e6_equivalent(const GaussianRational& j1, const GaussianRational& j2);

struct CanonicalMatrix {
    EvolutionAlgebra algebra;
    /// False only for an E6 class whose invariant has no cube root in Q(i):
    /// the witness is then class-correct but not in display shape [[0,1],[1,r]].
    bool display_form = true;
};

/// A concrete representative of the class. For E6 the display form
/// [[0,1],[1,r]] is used when r^3 = invariant is solvable in Q(i); otherwise
/// the class witness [[0,1],[j,j]] (invariant j) is returned, flagged.
CanonicalMatrix canonical_matrix(const ClassLabel& label);

struct InvariantTuple {
    std::size_t dim_e2 = 0;
    bool right_nilpotent = false;
    std::size_t annihilator_dim = 0;
    bool nil_basis_vector = false;

    friend bool operator==(const InvariantTuple& a, const InvariantTuple& b) = default;
};

InvariantTuple invariant_tuple(const EvolutionAlgebra& E);

} // namespace evolab
