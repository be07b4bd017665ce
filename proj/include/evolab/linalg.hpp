#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evolab/gaussian.hpp"

namespace evolab {

using GVec = std::vector<GaussianRational>;
using GMat = std::vector<GVec>;

/// In-place reduced row echelon form over Q(i): pivots 1, pivot columns
/// cleared elsewhere, pivot columns strictly increasing, zero rows removed.
/// Returns the rank.
std::size_t rref(GMat& m);

std::size_t rank(GMat m);

/// Determinant of a square matrix by fraction-free-ish exact elimination.
GaussianRational det(GMat m);

bool is_invertible(const GMat& m);

/// Solves the square system a·x = b; nullopt when a is singular.
std::optional<GVec> solve(GMat a, GVec b);

} // namespace evolab
