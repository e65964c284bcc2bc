#pragma once

#include "newton_widths/rational.hpp"

#include <optional>
#include <vector>

namespace newton_widths {

using RationalMatrix = std::vector<RationalVector>;

/// Rank of a set of row vectors (exact Gaussian elimination).
std::size_t rank(RationalMatrix rows);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b);

/// Basis of {x : rows * x = 0}; `columns` fixes the ambient dimension when
/// rows is empty.
RationalMatrix nullspace(RationalMatrix rows, std::size_t columns);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction.
RationalVector primitive_direction(const RationalVector& v);

}  // namespace newton_widths
