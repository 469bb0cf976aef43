#pragma once

#include "mixc1/geometry.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mixc1 {

/// Triangle + quadrilateral family sharing the parabolic edge (0,0), (1/4,1/2), (0,1).
MeshPair parabolic_family_mesh(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2);

/// Same outer control points with the straight edge (0,0), (0,c), (0,1).
MeshPair straight_family_mesh(const Rational& c, const Rational& x1, const Rational& y1, const Rational& x2,
                              const Rational& y2);

struct BundledExample {
    std::string name;
    std::string description;
};

const std::vector<BundledExample>& bundled_examples();

/// Throws InvalidArgument for unknown names.
MeshPair bundled_example(std::string_view name);

} // namespace mixc1
