#include "evolab/classify2.hpp"

#include <stdexcept>

#include "evolab/nilpotency.hpp"

namespace evolab {

std::string to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::Abelian: return "Abelian";
        case ClassTag::E1: return "E1";
        case ClassTag::E2: return "E2";
        case ClassTag::E3: return "E3";
        case ClassTag::E4: return "E4";
        case ClassTag::E5: return "E5";
        case ClassTag::E6: return "E6";
    }
    return "?";
}

namespace {

std::pair<GaussianRational, GaussianRational> sorted_pair(GaussianRational p,
                                                          GaussianRational q) {
    if (q < p) std::swap(p, q);
    return {std::move(p), std::move(q)};
}

ClassLabel e5_label(GaussianRational p, GaussianRational q) {
    ClassLabel l;
    l.tag = ClassTag::E5;
    l.e5_pair = sorted_pair(std::move(p), std::move(q));
    return l;
}

ClassLabel e6_label(GaussianRational inv) {
    ClassLabel l;
    l.tag = ClassTag::E6;
    l.e6_invariant = std::move(inv);
    return l;
}

} // namespace

ClassLabel classify_dim2(const EvolutionAlgebra& E) {
    if (E.dim() != 2) throw std::domain_error("classify_dim2: dimension must be 2");
    if (!E.concrete()) throw std::domain_error("classify_dim2: algebra not concrete");

    GMat a = E.values();
    std::size_t rk = rank(a);

    if (rk == 0) return {ClassTag::Abelian, std::nullopt, std::nullopt};

    if (rk == 1) {
        if (is_nil(E)) return {ClassTag::E4, std::nullopt, std::nullopt};
        if (annihilator_dim(E) == 1) return {ClassTag::E1, std::nullopt, std::nullopt};
        // Both rows are multiples c1·u, c2·u of the first nonzero row u.
        // The class splits on whether u^2 = (c1·u1^2 + c2·u2^2)·u vanishes.
        GVec u = E.value(0, 0).is_zero() && E.value(0, 1).is_zero()
                     ? GVec{E.value(1, 0), E.value(1, 1)}
                     : GVec{E.value(0, 0), E.value(0, 1)};
        std::size_t lead = u[0].is_zero() ? 1 : 0;
        GaussianRational c1 = E.value(0, lead) / u[lead];
        GaussianRational c2 = E.value(1, lead) / u[lead];
        GaussianRational q = c1 * u[0] * u[0] + c2 * u[1] * u[1];
        return {q.is_zero() ? ClassTag::E3 : ClassTag::E2, std::nullopt, std::nullopt};
    }

    GaussianRational a11 = E.value(0, 0), a12 = E.value(0, 1);
    GaussianRational a21 = E.value(1, 0), a22 = E.value(1, 1);
    if (!a11.is_zero() && !a22.is_zero())
        return e5_label(a12 * a22 / (a11 * a11), a21 * a11 / (a22 * a22));
    if (a11.is_zero())
        return e6_label(a22 * a22 * a22 / (a12 * a21 * a21));
    return e6_label(a11 * a11 * a11 / (a21 * a12 * a12));
}

bool e6_equivalent(const GaussianRational& j1, const GaussianRational& j2) {
    return j1 == j2;
}

namespace {

EvolutionAlgebra from_rows(GVec r0, GVec r1) {
    return EvolutionAlgebra::from_values({std::move(r0), std::move(r1)});
}

} // namespace

CanonicalMatrix canonical_matrix(const ClassLabel& label) {
    const GaussianRational zero, one(1);
    switch (label.tag) {
        case ClassTag::Abelian:
            return {from_rows({zero, zero}, {zero, zero})};
        case ClassTag::E1:
            return {from_rows({one, zero}, {zero, zero})};
        case ClassTag::E2:
            return {from_rows({one, zero}, {one, zero})};
        case ClassTag::E3:
            return {from_rows({one, one}, {-one, -one})};
        case ClassTag::E4:
            return {from_rows({zero, one}, {zero, zero})};
        case ClassTag::E5: {
            if (!label.e5_pair) throw std::domain_error("canonical_matrix: E5 pair missing");
            auto& [p, q] = *label.e5_pair;
            if (p * q == one)
                throw std::domain_error("canonical_matrix: E5 pair must satisfy p*q != 1");
            return {from_rows({one, p}, {q, one})};
        }
        case ClassTag::E6: {
            if (!label.e6_invariant)
                throw std::domain_error("canonical_matrix: E6 invariant missing");
            const GaussianRational& j = *label.e6_invariant;
            if (auto r = exact_cube_root(j))
                return {from_rows({zero, one}, {one, *r})};
            return {from_rows({zero, one}, {j, j}), false};
        }
    }
    throw std::domain_error("canonical_matrix: bad label");
}

InvariantTuple invariant_tuple(const EvolutionAlgebra& E) {
    if (E.dim() != 2) throw std::domain_error("invariant_tuple: dimension must be 2");
    InvariantTuple t;
    t.dim_e2 = lower_central(E, 2).dim();
    t.right_nilpotent = is_right_nilpotent(E).right_nilpotent;
    t.annihilator_dim = annihilator_dim(E);
    t.nil_basis_vector = has_nil_basis_vector(E);
    return t;
}

} // namespace evolab
