#pragma once

#include "mixc1/bipoly.hpp"
#include "mixc1/poly.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace mixc1 {

enum class BernsteinDirection { ToMonomial, FromMonomial };

/// Change of basis between {B^d_i} and {v^i}, both given as coefficient lists.
/// FromMonomial throws DegreeOverflow if the input has degree > d.
std::vector<Rational> bernstein_convert(std::span<const Rational> coeffs, unsigned d, BernsteinDirection direction);

/// Bernstein coefficients of p in degree d (degree-elevated when deg p < d).
std::vector<Rational> to_bernstein(const Poly& p, unsigned d);
Poly from_bernstein(std::span<const Rational> b);

/// B^d_i(v) in monomial form.
Poly bernstein_basis(unsigned d, unsigned i);

/// Bézier net indexed by (i, j): triangle layout i + j <= d, square layout 0 <= i, j <= d.
using BezierNet = std::map<std::pair<unsigned, unsigned>, Rational>;

/// Enumerates the index set of a net in row-major order, j fastest.
std::vector<std::pair<unsigned, unsigned>> net_indices(DomainKind kind, unsigned d);

/// Monomial form of a Bézier net; missing entries are zero.
BiPoly net_to_bipoly(const BezierNet& net, DomainKind kind, unsigned d);

/// Inverse of net_to_bipoly; throws DegreeOverflow if f does not fit the degree bound.
BezierNet bipoly_to_net(const BiPoly& f, DomainKind kind, unsigned d);

} // namespace mixc1
