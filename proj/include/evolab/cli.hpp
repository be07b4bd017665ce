#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evolab/algebra.hpp"
#include "evolab/blockiso.hpp"

namespace evolab::cli {

/// Loads an algebra from a JSON file ({"dim", "matrix", "parameters"}) or an
/// inline bracketed literal like [[0,1],[1,a4]]. File entries may only use
/// declared parameters; inline literals declare their symbols implicitly.
EvolutionAlgebra load_algebra(const std::string& source);

/// Same sources, but as a plain (possibly symbolic) matrix.
PolyMat load_polymat(const std::string& source);

/// Same sources, restricted to constant entries.
GMat load_concrete_matrix(const std::string& source);

/// Loads a monomial isomorphism from JSON {"pi": [...1-based...],
/// "scalars": ["...", ...]} given as a file or inline object.
MonomialIso load_monomial_iso(const std::string& source);

/// Command dispatch. Returns 0 on success, 1 on input errors, 2 when `iso`
/// decides NotIsomorphic or `verify` rejects the witness, 3 on an internal
/// consistency failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace evolab::cli
