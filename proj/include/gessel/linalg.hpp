#pragma once

#include <vector>

#include "gessel/exact.hpp"

namespace gessel {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Solves the square system A x = b exactly (Gaussian elimination over Q).
// SingularSystem if A is singular; PreconditionViolation on shape mismatch.
RationalVector solve_linear(RationalMatrix a, RationalVector b);

} // namespace gessel
