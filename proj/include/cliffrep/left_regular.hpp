#pragma once

#include "cliffrep/multivector.hpp"
#include "cliffrep/rational_matrix.hpp"

#include <vector>

namespace cliffrep {

// Coordinates of u in blade_order(sig).
std::vector<Rational> coordinates(const Multivector& u);
Multivector from_coordinates(const Signature& sig, const std::vector<Rational>& coords);

// Matrix of v -> u v; column j holds the coordinates of u b_j.
RationalMatrix left_regular_matrix(const Multivector& u);

}  // namespace cliffrep
