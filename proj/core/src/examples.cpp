#include "mixc1/examples.hpp"

#include "mixc1/errors.hpp"

namespace mixc1 {

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

MeshPair family(const Point& mid, const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2)
{
    const Point c0{0, 0}, c2{0, 1};
    Element tri(ElementKind::Triangle, {c0, mid, c2, {x1, y1}, {q(3, 4), 1}, {q(6, 5), q(3, 4)}});
    Element quad(ElementKind::Quadrilateral, {c0, mid, c2,
                                              {q(-2, 3), q(-1, 5)}, {x2, y2}, {q(-7, 10), q(6, 5)},
                                              {-1, 0}, {q(-5, 4), q(1, 2)}, {-1, 1}});
    return validate_mesh(std::move(tri), std::move(quad));
}

/// Quadrilateral point making alpha~1 and alpha~2 share a quadratic factor.
std::pair<Rational, Rational> quadratic_factor_point(const Rational& x1, const Rational& y1)
{
    const Rational den = 60 * (2 * x1 - y1);
    return {(24 * x1 * y1 - 48 * x1 * x1 + 54 * x1 - 44 * y1 - 17) / den,
            (-48 * x1 * y1 + 84 * x1 + 24 * y1 * y1 - 8 * y1 - 17) / den};
}

} // namespace

MeshPair parabolic_family_mesh(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2)
{
    return family({q(1, 4), q(1, 2)}, x1, y1, x2, y2);
}

MeshPair straight_family_mesh(const Rational& c, const Rational& x1, const Rational& y1, const Rational& x2,
                              const Rational& y2)
{
    return family({0, c}, x1, y1, x2, y2);
}

const std::vector<BundledExample>& bundled_examples()
{
    static const std::vector<BundledExample> list = {
        {"ex1-generic", "parabolic edge, generic inner points"},
        {"ex1-special-line", "parabolic edge, proportional remainders (x2 = -2/5 on the special line)"},
        {"ex1-special-c", "parabolic edge, linear common factor of the gluing functions"},
        {"ex1-special-c1", "parabolic edge, linear common factor and proportional remainders"},
        {"ex1-gamma-quadratic", "parabolic edge, quadratic common factor"},
        {"ex1-gamma-beta", "parabolic edge, common factor equal to beta"},
        {"ex2-generic", "non-uniform straight edge, generic inner points"},
        {"ex2-case2", "non-uniform straight edge, one extra interface parameter"},
        {"ex2-choice3", "non-uniform straight edge, gamma = beta"},
        {"ex2-choice4", "non-uniform straight edge, beta divides every gluing function"},
        {"ex3", "uniform straight edge, generic inner points"},
        {"ex3-case2", "uniform straight edge, tied leading coefficients"},
    };
    return list;
}

MeshPair bundled_example(std::string_view name)
{
    if (name == "ex1-generic")
        return parabolic_family_mesh(q(1, 2), q(-1, 5), q(-1, 2), q(2, 3));
    if (name == "ex1-special-line") {
        const Rational x2 = q(-2, 5);
        return parabolic_family_mesh(q(1, 2), q(-1, 5), x2, (154 - 225 * x2) / 300);
    }
    if (name == "ex1-special-c")
        return parabolic_family_mesh(q(9, 10), q(14, 25), q(-1, 2), q(41, 100));
    if (name == "ex1-special-c1")
        return parabolic_family_mesh(q(9, 10), q(14, 25), q(-19, 45), q(397, 900));
    if (name == "ex1-gamma-quadratic" || name == "ex1-gamma-beta") {
        const Rational x1 = name == "ex1-gamma-beta" ? q(7, 10) : q(1, 2);
        const Rational y1 = name == "ex1-gamma-beta" ? q(-1, 10) : q(-1, 5);
        const auto [x2, y2] = quadratic_factor_point(x1, y1);
        return parabolic_family_mesh(x1, y1, x2, y2);
    }
    if (name == "ex2-generic")
        return straight_family_mesh(q(1, 3), q(1, 2), q(-1, 5), q(-1, 2), q(2, 3));
    if (name == "ex2-case2") {
        const Rational x2 = q(-85, 100);
        return straight_family_mesh(q(1, 3), q(1, 2), q(-1, 5), x2, -(3067 + 3840 * x2) / 900);
    }
    if (name == "ex2-choice3")
        return straight_family_mesh(q(1, 3), q(3, 8), q(-1, 5), q(-101, 120), q(2, 3));
    if (name == "ex2-choice4")
        return straight_family_mesh(q(1, 3), q(3, 8), q(1, 3), q(-101, 120), q(11, 60));
    if (name == "ex3")
        return straight_family_mesh(q(1, 2), q(1, 2), q(-1, 5), q(-1, 2), q(2, 3));
    if (name == "ex3-case2") {
        // 86/15 - 4 x1 + 4 x2 - 82/15 y1 - 8 x2 y1 - 6 y2 + 8 x1 y2 = 0, solved for y2
        const Rational x1 = q(1, 2), y1 = q(-1, 5), x2 = q(-1, 2);
        const Rational rest = q(86, 15) - 4 * x1 + 4 * x2 - q(82, 15) * y1 - 8 * x2 * y1;
        return straight_family_mesh(q(1, 2), x1, y1, x2, -rest / (8 * x1 - 6));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown example '" + std::string(name) + "'");
}

} // namespace mixc1
