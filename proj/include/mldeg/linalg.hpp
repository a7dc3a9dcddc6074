#pragma once

// Small dense exact linear algebra over Q.

#include "mldeg/rational.hpp"

#include <cstddef>
#include <vector>

namespace mldeg {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);

// Reduced row echelon form with zero rows removed; pivots are the leftmost
// nonzero entry of each row and equal 1. Canonical for a given row space.
RationalMatrix rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

} // namespace mldeg
