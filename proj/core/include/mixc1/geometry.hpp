#pragma once

#include "mixc1/bernstein.hpp"
#include "mixc1/bipoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace mixc1 {

enum class ElementKind { Triangle, Quadrilateral };

const char* to_string(ElementKind kind);
ElementKind parse_element_kind(std::string_view text);

struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Pair of polynomials in v, used for vector-valued edge data.
struct VecPoly {
    Poly x;
    Poly y;
};

/// (y, -x)
VecPoly perp(const VecPoly& a);
Poly dot(const VecPoly& a, const VecPoly& b);
/// det[a, b] = a.x b.y - a.y b.x
Poly cross(const VecPoly& a, const VecPoly& b);

/// Quadratic Bézier element over the reference triangle or unit square.
class Element {
public:
    /// Control points in row-major (i, j) order, j fastest: 6 for a triangle, 9 for a quadrilateral.
    Element(ElementKind kind, std::vector<Point> control_points);

    ElementKind kind() const { return kind_; }
    DomainKind domain() const { return kind_ == ElementKind::Triangle ? DomainKind::Triangle : DomainKind::Square; }
    /// 1 for quadrilaterals, 0 for triangles.
    int sigma() const { return kind_ == ElementKind::Quadrilateral ? 1 : 0; }

    const Point& control_point(unsigned i, unsigned j) const;
    /// Control points in input order.
    const std::vector<Point>& control_points() const { return points_; }

    const BiPoly& fx() const { return fx_; }
    const BiPoly& fy() const { return fy_; }

    std::array<double, 2> eval(double u, double v) const { return {fx_.eval(u, v), fy_.eval(u, v)}; }

private:
    ElementKind kind_;
    std::vector<Point> points_;
    std::vector<std::pair<unsigned, unsigned>> index_;
    BiPoly fx_;
    BiPoly fy_;
};

/// Two elements glued along u = 0 with matching v direction.
struct MeshPair {
    Element elem1;
    Element elem2;
    std::array<Point, 3> edge;

    const Element& element(int ell) const;
};

/// Checks shared edge coincidence and interface regularity. Throws EdgeMismatch / IrregularOnInterface.
MeshPair validate_mesh(Element elem1, Element elem2);

struct EdgeDerivatives {
    VecPoly du;
    VecPoly dv;
};

/// ∂uF and ∂vF of element ell (1 or 2) restricted to u = 0.
EdgeDerivatives edge_derivatives(const MeshPair& m, int ell);

BiPoly jacobian_det(const MeshPair& m, int ell);

/// Parses the mesh JSON document; throws Parse on malformed input, then validates.
MeshPair parse_mesh_json(const std::string& text);
std::string mesh_to_json(const MeshPair& m);

} // namespace mixc1
