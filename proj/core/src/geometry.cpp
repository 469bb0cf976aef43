#include "mixc1/geometry.hpp"

#include "mixc1/errors.hpp"

#include "json.hpp"

#include <algorithm>

namespace mixc1 {

const char* to_string(ElementKind kind)
{
    return kind == ElementKind::Triangle ? "triangle" : "quadrilateral";
}

ElementKind parse_element_kind(std::string_view text)
{
    if (text == "triangle")
        return ElementKind::Triangle;
    if (text == "quadrilateral" || text == "quad")
        return ElementKind::Quadrilateral;
    throw Error(ErrorCode::Parse, "unknown element kind '" + std::string(text) + "'");
}

VecPoly perp(const VecPoly& a) { return {a.y, -a.x}; }

Poly dot(const VecPoly& a, const VecPoly& b) { return a.x * b.x + a.y * b.y; }

Poly cross(const VecPoly& a, const VecPoly& b) { return a.x * b.y - a.y * b.x; }

Element::Element(ElementKind kind, std::vector<Point> control_points)
    : kind_(kind), points_(std::move(control_points)), index_(net_indices(domain(), 2))
{
    if (points_.size() != index_.size())
        throw Error(ErrorCode::Parse, std::string(to_string(kind)) + " needs " + std::to_string(index_.size()) +
                                          " control points, got " + std::to_string(points_.size()));
    BezierNet nx, ny;
    for (std::size_t k = 0; k < index_.size(); ++k) {
        nx[index_[k]] = points_[k].x;
        ny[index_[k]] = points_[k].y;
    }
    fx_ = net_to_bipoly(nx, domain(), 2);
    fy_ = net_to_bipoly(ny, domain(), 2);
}

const Point& Element::control_point(unsigned i, unsigned j) const
{
    auto it = std::find(index_.begin(), index_.end(), std::make_pair(i, j));
    if (it == index_.end())
        throw Error(ErrorCode::InvalidArgument, "control point index outside the element layout");
    return points_[static_cast<std::size_t>(it - index_.begin())];
}

const Element& MeshPair::element(int ell) const
{
    if (ell == 1)
        return elem1;
    if (ell == 2)
        return elem2;
    throw Error(ErrorCode::InvalidArgument, "element index must be 1 or 2");
}

namespace {

EdgeDerivatives derivatives_of(const Element& e)
{
    return {{restrict_u0(partial_u(e.fx())), restrict_u0(partial_u(e.fy()))},
            {restrict_u0(partial_v(e.fx())), restrict_u0(partial_v(e.fy()))}};
}

} // namespace

MeshPair validate_mesh(Element elem1, Element elem2)
{
    std::array<Point, 3> edge;
    for (unsigned j = 0; j < 3; ++j) {
        const Point& a = elem1.control_point(0, j);
        const Point& b = elem2.control_point(0, j);
        if (!(a == b))
            throw Error(ErrorCode::EdgeMismatch, "interface control point C_{0," + std::to_string(j) +
                                                     "} differs: (" + to_string(a.x) + ", " + to_string(a.y) +
                                                     ") vs (" + to_string(b.x) + ", " + to_string(b.y) + ")");
        edge[j] = a;
    }
    int ell = 1;
    for (const Element* e : {&elem1, &elem2}) {
        auto dd = derivatives_of(*e);
        Poly det = cross(dd.du, dd.dv);
        if (sign_constant_on_unit_interval(det) == UnitSign::HasZero)
            throw Error(ErrorCode::IrregularOnInterface,
                        "Jacobian determinant of element " + std::to_string(ell) + " vanishes on the interface");
        ++ell;
    }
    return MeshPair{std::move(elem1), std::move(elem2), edge};
}

EdgeDerivatives edge_derivatives(const MeshPair& m, int ell) { return derivatives_of(m.element(ell)); }

BiPoly jacobian_det(const MeshPair& m, int ell)
{
    const Element& e = m.element(ell);
    return partial_u(e.fx()) * partial_v(e.fy()) - partial_u(e.fy()) * partial_v(e.fx());
}

namespace {

Rational json_rational(const nlohmann::json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.dump());
    if (j.is_number_float())
        return parse_rational(j.dump());
    throw Error(ErrorCode::Parse, "coordinate must be a number or a rational string");
}

} // namespace

MeshPair parse_mesh_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorCode::Parse, "mesh document must be an object");
    if (doc.contains("degree_geometry") && doc["degree_geometry"] != 2)
        throw Error(ErrorCode::Parse, "only degree_geometry 2 is supported");
    if (!doc.contains("elements") || !doc["elements"].is_array() || doc["elements"].size() != 2)
        throw Error(ErrorCode::Parse, "mesh needs exactly two elements");
    std::vector<Element> elems;
    for (const auto& e : doc["elements"]) {
        if (!e.is_object() || !e.contains("kind") || !e["kind"].is_string() || !e.contains("control_points") ||
            !e["control_points"].is_array())
            throw Error(ErrorCode::Parse, "element needs 'kind' and 'control_points'");
        std::vector<Point> pts;
        for (const auto& p : e["control_points"]) {
            if (!p.is_array() || p.size() != 2)
                throw Error(ErrorCode::Parse, "control point must be [x, y]");
            pts.push_back({json_rational(p[0]), json_rational(p[1])});
        }
        elems.emplace_back(parse_element_kind(e["kind"].get<std::string>()), std::move(pts));
    }
    return validate_mesh(std::move(elems[0]), std::move(elems[1]));
}

std::string mesh_to_json(const MeshPair& m)
{
    nlohmann::ordered_json doc;
    doc["degree_geometry"] = 2;
    doc["elements"] = nlohmann::ordered_json::array();
    for (const Element* e : {&m.elem1, &m.elem2}) {
        nlohmann::ordered_json el;
        el["kind"] = to_string(e->kind());
        el["control_points"] = nlohmann::ordered_json::array();
        for (const auto& p : e->control_points())
            el["control_points"].push_back({to_string(p.x), to_string(p.y)});
        doc["elements"].push_back(std::move(el));
    }
    return doc.dump(2);
}

} // namespace mixc1
