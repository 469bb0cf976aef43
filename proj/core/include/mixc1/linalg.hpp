#pragma once

#include "mixc1/rational.hpp"

#include <optional>
#include <vector>

namespace mixc1 {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const Matrix& a);

/// Exact inverse; nullopt when singular. Requires a square matrix.
std::optional<Matrix> inverse(const Matrix& a);

/// Solves a x = b exactly; nullopt when a is singular.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

/// Exact determinant of a square matrix.
Rational determinant(const Matrix& a);

} // namespace mixc1
