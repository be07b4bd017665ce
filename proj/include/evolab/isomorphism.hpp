#pragma once

#include <string>
#include <vector>

#include "evolab/algebra.hpp"
#include "evolab/groebner.hpp"

namespace evolab {

/// Which cross-equation convention the system uses. `derived` states
/// phi(e_i)·phi(e_j) = 0 with the row convention (row i of T = coordinates
/// of phi(e_i)); `appendix_literal` transposes the unknown matrix inside the
/// star product, reproducing the published script verbatim.
enum class IsoMode { derived, appendix_literal };

struct IsoSystem {
    std::vector<std::string> variables; // t entries, then y, then parameters
    std::vector<std::vector<std::string>> t_names; // n x n unknown matrix
    std::string y_name;                            // Rabinowitsch variable
    std::vector<Polynomial> equations;
    IsoMode mode = IsoMode::derived;
};

/// Polynomial system expressing "some invertible natural-basis-compatible
/// homomorphism P -> Q exists": n^2 squares equations, n·(n^2-n)/2 cross
/// equations and det(T)·y - 1 = 0.
IsoSystem build_iso_system(const EvolutionAlgebra& P, const EvolutionAlgebra& Q, IsoMode mode);

enum class IsoVerdictKind { NotIsomorphic, IsomorphicSomewhere };

struct IsoVerdict {
    IsoVerdictKind verdict = IsoVerdictKind::NotIsomorphic;
    std::size_t basis_size = 0;
    /// True when P or Q carries symbolic parameters. Parameters are treated
    /// as existentially quantified ring variables, so IsomorphicSomewhere
    /// then means "isomorphic for some parameter values".
    bool parameterized = false;
};

/// Groebner-based consistency check of the system over the algebraic
/// closure: reduced basis {1} certifies no isomorphism exists.
IsoVerdict decide_isomorphic(const EvolutionAlgebra& P, const EvolutionAlgebra& Q,
                             IsoMode mode = IsoMode::derived);

/// Exact certification of a concrete witness T (rows = images of P's basis
/// in Q's basis): invertibility, the squares equations and the derived-mode
/// cross equations, all by direct evaluation.
bool verify_isomorphism(const GMat& T, const EvolutionAlgebra& P, const EvolutionAlgebra& Q);

/// Exact determinant of a polynomial matrix (cofactor expansion, memoized
/// over column subsets).
Polynomial poly_det(const PolyMat& m);

} // namespace evolab
