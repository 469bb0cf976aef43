#include "mixc1/gluing.hpp"

#include "mixc1/errors.hpp"

namespace mixc1 {

const char* case_letter(InterfaceCase c)
{
    switch (c) {
    case InterfaceCase::UniformLinear: return "A";
    case InterfaceCase::NonuniformLinear: return "B";
    case InterfaceCase::Parabolic: return "C";
    }
    return "?";
}

const char* to_string(InterfaceCase c)
{
    switch (c) {
    case InterfaceCase::UniformLinear: return "uniform_linear";
    case InterfaceCase::NonuniformLinear: return "nonuniform_linear";
    case InterfaceCase::Parabolic: return "parabolic";
    }
    return "?";
}

int deg_or_neg(const Poly& p) { return p.degree().value_or(-1); }

InterfaceClass classify_edge(const std::array<Point, 3>& edge)
{
    const Point& c0 = edge[0];
    const Point& c1 = edge[1];
    const Point& c2 = edge[2];
    const Rational ex = c2.x - c0.x, ey = c2.y - c0.y;
    const Rational fx = c1.x - c0.x, fy = c1.y - c0.y;
    if (sgn(ex) == 0 && sgn(ey) == 0)
        throw Error(ErrorCode::DegenerateEdge, "edge end points coincide");
    InterfaceClass out;
    if (sgn(ex * fy - ey * fx) != 0) {
        out.kind = InterfaceCase::Parabolic;
        return out;
    }
    const Rational lambda = (fx * ex + fy * ey) / (ex * ex + ey * ey);
    if (lambda == Rational(1, 2)) {
        out.kind = InterfaceCase::UniformLinear;
        return out;
    }
    out.kind = InterfaceCase::NonuniformLinear;
    out.lambda = lambda;
    out.rho = Poly::linear(2 * lambda, 2 * (1 - 2 * lambda));
    out.n0 = Point{ey, -ex};
    return out;
}

InterfaceClass classify_interface(const MeshPair& m) { return classify_edge(m.edge); }

GluingData compute_gluing(const MeshPair& m)
{
    GluingData g;
    g.cls = classify_interface(m);
    g.sigma1 = m.elem1.sigma();
    g.sigma2 = m.elem2.sigma();

    const EdgeDerivatives e1 = edge_derivatives(m, 1);
    const EdgeDerivatives e2 = edge_derivatives(m, 2);
    const VecPoly n = perp(e1.dv);

    g.alpha_tilde1 = dot(e1.du, n);
    g.alpha_tilde2 = dot(e2.du, n);
    g.alpha = cross(e2.du, e1.du);
    g.beta = dot(n, n);
    g.beta1 = dot(perp(e1.du), n);
    g.beta2 = dot(perp(e2.du), n);

    const GcdResult gr = gcd_normalized(g.alpha_tilde1, g.alpha_tilde2);
    g.gamma = gr.gcd;
    g.gamma_normalized_at_zero = gr.normalized_at_zero;
    g.alpha1 = quo_rem(g.alpha_tilde1, g.gamma).quotient;
    g.alpha2 = quo_rem(g.alpha_tilde2, g.gamma).quotient;

    if (sign_constant_on_unit_interval(g.gamma) == UnitSign::HasZero)
        throw Error(ErrorCode::IrregularGluing, "gamma vanishes on [0, 1]");
    if (sign_constant_on_unit_interval(g.alpha1) == UnitSign::HasZero)
        throw Error(ErrorCode::IrregularGluing, "alpha_1 vanishes on [0, 1]");
    if (sign_constant_on_unit_interval(g.alpha2) == UnitSign::HasZero)
        throw Error(ErrorCode::IrregularGluing, "alpha_2 vanishes on [0, 1]");

    auto split = [&](const Poly& p, Poly& star, Poly& hat) {
        QuoRem qr = quo_rem(p, g.beta);
        star = std::move(qr.quotient);
        hat = std::move(qr.remainder);
    };
    split(g.alpha1, g.star_alpha1, g.hat_alpha1);
    split(g.alpha2, g.star_alpha2, g.hat_alpha2);
    split(g.beta1, g.star_beta1, g.hat_beta1);
    split(g.beta2, g.star_beta2, g.hat_beta2);

    if (!(g.beta * g.alpha == g.gamma * (g.alpha2 * g.beta1 - g.alpha1 * g.beta2)))
        throw Error(ErrorCode::InternalInconsistency, "gluing identity beta alpha = gamma (alpha2 beta1 - alpha1 beta2) fails");
    return g;
}

Rational lemma4_check(const GluingData& g)
{
    if (g.cls.kind != InterfaceCase::Parabolic)
        throw Error(ErrorCode::WrongCase, "lemma4_check applies to parabolic interfaces only");
    QuoRem qr = quo_rem(g.hat_alpha1 * g.hat_beta2 - g.hat_alpha2 * g.hat_beta1, g.beta);
    if (!qr.remainder.is_zero() || !qr.quotient.is_constant())
        throw Error(ErrorCode::InternalInconsistency, "beta does not divide the hat cross product");
    return qr.quotient.coeff(0);
}

} // namespace mixc1
