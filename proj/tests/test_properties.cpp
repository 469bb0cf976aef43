#include "doctest.h"
#include "support.hpp"

#include "mixc1/bernstein.hpp"
#include "mixc1/c1space.hpp"
#include "mixc1/linalg.hpp"
#include "mixc1/verify.hpp"

using namespace mixc1;
using namespace mixc1::testing;

namespace {

int degree(const Poly& p) { return deg_or_neg(p); }

/// Linear pullback of a + b x + c y onto both elements.
IsoFunction linear_pullback(const MeshPair& m, const Rational& a, const Rational& b, const Rational& c, unsigned d)
{
    IsoFunction f;
    f.d = d;
    f.kind1 = m.elem1.domain();
    f.kind2 = m.elem2.domain();
    for (int ell : {1, 2}) {
        const Element& e = m.element(ell);
        const BiPoly p = BiPoly::constant(e.domain(), a) + e.fx() * b + e.fy() * c;
        (ell == 1 ? f.net1 : f.net2) = bipoly_to_net(p, e.domain(), d);
    }
    return f;
}

std::vector<MeshPair> seeded_meshes(std::uint64_t seed, int count)
{
    Rng rng(seed);
    std::vector<MeshPair> out;
    for (int i = 0; i < count; ++i)
        out.push_back(random_mesh(rng, static_cast<EdgeShape>(i % 3)));
    return out;
}

std::vector<Rational> flatten(const IsoFunction& f)
{
    std::vector<Rational> v;
    for (const auto& [ij, c] : f.net1)
        v.push_back(c);
    for (const auto& [ij, c] : f.net2)
        v.push_back(c);
    return v;
}

} // namespace

TEST_SUITE("polyalg")
{
    TEST_CASE("quo_rem reconstructs the dividend")
    {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            CAPTURE(seed);
            Rng rng(seed);
            const Poly p = random_poly(rng, 7);
            Poly q = random_poly(rng, 4);
            const auto [quot, rem] = quo_rem(p, q);
            CHECK(quot * q + rem == p);
            CHECK(degree(rem) < degree(q));
        }
    }

    TEST_CASE("gcd divides both inputs and every common divisor divides the gcd")
    {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            CAPTURE(seed);
            Rng rng(seed);
            const Poly c = random_poly(rng, 2);
            const Poly p = random_poly(rng, 3) * c;
            const Poly q = random_poly(rng, 3) * c;
            const Poly g = gcd_normalized(p, q).gcd;
            CHECK(divides(g, p));
            CHECK(divides(g, q));
            CHECK(divides(c, g));
            // candidate factors from the division chain of p by q
            const Poly r = quo_rem(p, q).remainder;
            if (!r.is_zero() && divides(r, p) && divides(r, q))
                CHECK(divides(r, g));
        }
    }

    TEST_CASE("integration then differentiation is the identity")
    {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Rng rng(seed);
            const Poly p = random_poly(rng, 8);
            CHECK(differentiate(integrate_from_zero(p)) == p);
            CHECK(integrate_from_zero(p)(0) == 0);
        }
    }

    TEST_CASE("eval_derivative matches repeated differentiation")
    {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Rng rng(seed);
            const Poly p = random_poly(rng, 8);
            const Rational t = random_rational(rng, -10, 10, 7);
            const unsigned k = static_cast<unsigned>(seed % 5);
            Poly q = p;
            for (unsigned i = 0; i < k; ++i)
                q = differentiate(q);
            CHECK(eval_derivative(p, t, k) == q(t));
        }
    }

    TEST_CASE("Bernstein round trip")
    {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Rng rng(seed);
            const Poly p = random_poly(rng, 6);
            const unsigned d = static_cast<unsigned>(degree(p) < 0 ? 0 : degree(p)) + seed % 4;
            const auto b = to_bernstein(p, d);
            CHECK(b.size() == d + 1);
            CHECK(from_bernstein(b) == p);
            CHECK(Poly(bernstein_convert(bernstein_convert(p.coeffs(), d, BernsteinDirection::FromMonomial), d,
                                         BernsteinDirection::ToMonomial)) == p);
        }
    }

    TEST_CASE("partition of unity")
    {
        for (unsigned d = 0; d <= 12; ++d) {
            CHECK(to_bernstein(Poly::constant(1), d) == std::vector<Rational>(d + 1, Rational(1)));
            Poly sum;
            for (unsigned i = 0; i <= d; ++i)
                sum += bernstein_basis(d, i);
            CHECK(sum == Poly::constant(1));
        }
    }

    TEST_CASE("Sturm classifier never contradicts sampling")
    {
        int has_zero = 0, constant_sign = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            CAPTURE(seed);
            Rng rng(seed);
            const Poly p = random_poly(rng, 5, 6, 3);
            if (p.is_zero())
                continue;
            const UnitSign s = sign_constant_on_unit_interval(p);
            bool pos = false, neg = false, zero = false;
            for (long k = 0; k < 1000; ++k) {
                const Rational y = p(make_rational(k, 999));
                pos |= y > 0;
                neg |= y < 0;
                zero |= y == 0;
            }
            if (zero || (pos && neg))
                CHECK(s == UnitSign::HasZero);
            if (s == UnitSign::Positive)
                CHECK((pos && !neg && !zero));
            if (s == UnitSign::Negative)
                CHECK((neg && !pos && !zero));
            (s == UnitSign::HasZero ? has_zero : constant_sign)++;
        }
        // both verdicts are exercised
        CHECK(has_zero > 10);
        CHECK(constant_sign > 10);
    }
}

TEST_SUITE("geometry")
{
    TEST_CASE("interface Jacobian equals gamma alpha_ell")
    {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            CAPTURE(seed);
            Rng rng(seed);
            const MeshPair m = random_mesh(rng, random_shape(rng));
            const GluingData g = compute_gluing(m);
            CHECK(restrict_u0(jacobian_det(m, 1)) == g.gamma * g.alpha1);
            CHECK(restrict_u0(jacobian_det(m, 2)) == g.gamma * g.alpha2);
            const auto e1 = edge_derivatives(m, 1), e2 = edge_derivatives(m, 2);
            CHECK(e1.dv.x == e2.dv.x);
            CHECK(e1.dv.y == e2.dv.y);
        }
    }

    TEST_CASE("affine elements have constant Jacobian")
    {
        Rng rng(7);
        for (int n = 0; n < 30; ++n) {
            // F(u, v) = (a u, v + b u) on each side, images of the reference control grids
            const Rational a1 = random_rational(rng, 1, 9, 4), a2 = -random_rational(rng, 1, 9, 4);
            const Rational b1 = random_rational(rng, -5, 5, 4), b2 = random_rational(rng, -5, 5, 4);
            auto build = [](ElementKind kind, const Rational& a, const Rational& b) {
                std::vector<Point> pts;
                for (long i = 0; i <= 2; ++i)
                    for (long j = 0; j <= (kind == ElementKind::Triangle ? 2 - i : 2); ++j)
                        pts.push_back({a * R(i, 2), R(j, 2) + b * R(i, 2)});
                return Element(kind, std::move(pts));
            };
            const ElementKind k1 = n % 2 ? ElementKind::Triangle : ElementKind::Quadrilateral;
            const ElementKind k2 = n % 3 ? ElementKind::Quadrilateral : ElementKind::Triangle;
            const MeshPair m = validate_mesh(build(k1, a1, b1), build(k2, a2, b2));
            CHECK(jacobian_det(m, 1) == BiPoly::constant(m.elem1.domain(), a1));
            CHECK(jacobian_det(m, 2) == BiPoly::constant(m.elem2.domain(), a2));
        }
    }
}

TEST_SUITE("gluing")
{
    TEST_CASE("rel-alpha-beta on 500 random meshes")
    {
        Rng rng(2024);
        for (int n = 0; n < 500; ++n) {
            const GluingData g = compute_gluing(random_mesh(rng, random_shape(rng)));
            CHECK((g.beta * g.alpha - g.gamma * g.alpha2 * g.beta1 + g.gamma * g.alpha1 * g.beta2).is_zero());
        }
    }

    TEST_CASE("degree bounds and case structure")
    {
        Rng rng(99);
        for (int n = 0; n < 150; ++n) {
            CAPTURE(n);
            const EdgeShape shape = static_cast<EdgeShape>(n % 3);
            const GluingData g = compute_gluing(random_mesh(rng, shape));
            const int extra = g.cls.kind == InterfaceCase::Parabolic ? 2 : 1;
            for (int ell : {1, 2}) {
                CHECK(degree(g.alpha_of(ell)) <= extra + g.sigma_of(ell));
                CHECK(degree(g.beta_of(ell)) <= 2 + g.sigma_of(ell));
            }
            CHECK(degree(g.beta) <= 2);
            switch (g.cls.kind) {
            case InterfaceCase::UniformLinear:
                CHECK(shape == EdgeShape::Uniform);
                CHECK(degree(g.beta) == 0);
                break;
            case InterfaceCase::NonuniformLinear:
                CHECK(shape == EdgeShape::Nonuniform);
                REQUIRE(g.cls.rho);
                CHECK(divides(*g.cls.rho, g.beta1));
                CHECK(divides(*g.cls.rho, g.beta2));
                break;
            case InterfaceCase::Parabolic: {
                CHECK(shape == EdgeShape::Parabolic);
                const Rational disc = g.beta.coeff(1) * g.beta.coeff(1) - 4 * g.beta.coeff(0) * g.beta.coeff(2);
                CHECK(disc < 0);
                break;
            }
            }
        }
    }
}

TEST_SUITE("c1space")
{
    TEST_CASE("every direction satisfies the divisibility and degree conditions; ledger matches the formula")
    {
        Rng rng(31);
        for (int n = 0; n < 30; ++n) {
            CAPTURE(n);
            const MeshPair m = random_mesh(rng, static_cast<EdgeShape>(n % 3));
            const GluingData g = compute_gluing(m);
            const int min_term = std::min(g.sigma1 - degree(g.alpha1), g.sigma2 - degree(g.alpha2));
            for (unsigned d = 2; d <= 8; ++d) {
                CAPTURE(d);
                const TraceNormalSpace t = algorithm1(g, g.cls, d);
                for (const auto& p : t.params) {
                    CAPTURE(p.name);
                    for (int ell : {1, 2}) {
                        const Poly r = g.alpha_of(ell) * p.omega + g.beta_of(ell) * differentiate(p.theta);
                        CHECK(divides(g.beta, r));
                        CHECK(degree(r) <= static_cast<int>(d) - 1 + g.sigma_of(ell) + degree(g.beta));
                    }
                }
                CHECK(static_cast<long>(t.interface_dofs()) == 2L * d + min_term + static_cast<long>(t.kappa));
                CHECK(t.params.size() == t.interface_dofs());
                const SpaceDimensions dims = dimension(g, t, d);
                CHECK(dims.total == dims.D0 + t.interface_dofs());
            }
        }
    }

    TEST_CASE("oracle equivalence on seeded meshes")
    {
        const auto meshes = seeded_meshes(555, 6);
        for (std::size_t n = 0; n < meshes.size(); ++n) {
            const GluingData g = compute_gluing(meshes[n]);
            for (unsigned d = 2; d <= 6; ++d) {
                CAPTURE(n);
                CAPTURE(d);
                const unsigned total = dimension(g, algorithm1(g, g.cls, d), d).total;
                CHECK(dimension_oracle(meshes[n], g, d).nullspace_dim == total);
            }
        }
    }

    TEST_CASE("pullbacks of 1, x, y lie in the space")
    {
        Rng rng(17);
        std::vector<MeshPair> meshes;
        for (const auto& name : corpus())
            meshes.push_back(bundled_example(name));
        for (int n = 0; n < 30; ++n)
            meshes.push_back(random_mesh(rng, static_cast<EdgeShape>(n % 3)));
        for (const MeshPair& m : meshes) {
            const GluingData g = compute_gluing(m);
            const VecPoly n0 = perp(edge_derivatives(m, 1).dv);
            for (unsigned d : {2u, 3u, 5u}) {
                for (const auto& [a, b, c] : {std::tuple<long, long, long>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
                    const IsoFunction f = linear_pullback(m, a, b, c, d);
                    const Poly theta = restrict_u0(f.bipoly(1));
                    // scaled normal derivative of a linear function: gamma * (grad . n)
                    const Poly omega = g.gamma * (n0.x * Rational(b) + n0.y * Rational(c));
                    REQUIRE(admissible(g, theta, omega, d));
                    for (int ell : {1, 2})
                        CHECK(eta(g, theta, omega, ell, d) == restrict_u0(partial_u(f.bipoly(ell))));
                    CHECK(c1_identity_check(f, g).pass);
                }
            }
        }
    }

    TEST_CASE("swapping the elements of a parabolic interface keeps the dimension")
    {
        Rng rng(404);
        for (int n = 0; n < 25; ++n) {
            const MeshPair m = random_mesh(rng, EdgeShape::Parabolic);
            const MeshPair s = validate_mesh(m.elem2, m.elem1);
            const GluingData g = compute_gluing(m), h = compute_gluing(s);
            CHECK(h.alpha == -g.alpha);
            CHECK(h.alpha1 == g.alpha2);
            for (unsigned d = 2; d <= 7; ++d)
                CHECK(dimension(g, algorithm1(g, g.cls, d), d).total == dimension(h, algorithm1(h, h.cls, d), d).total);
        }
    }
}

TEST_SUITE("basisgen")
{
    TEST_CASE("random bases pass the identity check and are dual to the functionals")
    {
        const auto meshes = seeded_meshes(8080, 9);
        for (std::size_t n = 0; n < meshes.size(); ++n) {
            CAPTURE(n);
            const MeshPair& m = meshes[n];
            const GluingData g = compute_gluing(m);
            for (unsigned d : {3u, 5u}) {
                const TraceNormalSpace t = algorithm1(g, g.cls, d);
                const BasisSet b = generate_basis(m, g, t);
                CHECK(b.size() == dimension(g, t, d).total);
                for (const auto& f : b.interface_functions)
                    CHECK(c1_identity_check(f, g).pass);
                const auto funcs = b.functionals.all();
                for (std::size_t i = 0; i < funcs.size(); ++i)
                    for (std::size_t j = 0; j < b.interface_traces.size(); ++j) {
                        const auto& [theta, omega] = b.interface_traces[j];
                        CHECK(apply(funcs[i], theta, omega) == (i == j ? 1 : 0));
                    }
            }
        }
    }

    TEST_CASE("Gram matrix is nonsingular")
    {
        const auto meshes = seeded_meshes(123, 3);
        for (std::size_t n = 0; n < meshes.size(); ++n) {
            const MeshPair& m = meshes[n];
            const GluingData g = compute_gluing(m);
            for (unsigned d : {2u, 3u, 4u}) {
                CAPTURE(n);
                CAPTURE(d);
                const BasisSet b = generate_basis(m, g, algorithm1(g, g.cls, d));
                std::vector<const IsoFunction*> all;
                for (const auto& f : b.interface_functions)
                    all.push_back(&f);
                for (const auto& f : b.interior_functions)
                    all.push_back(&f);
                const InnerProduct ip(m);
                Matrix gram(all.size(), std::vector<Rational>(all.size()));
                for (std::size_t i = 0; i < all.size(); ++i)
                    for (std::size_t j = i; j < all.size(); ++j)
                        gram[i][j] = gram[j][i] = ip(*all[i], *all[j]);
                CHECK(determinant(gram) != 0);
            }
        }
    }

    TEST_CASE("Gram-Schmidt keeps the span of the mu functions")
    {
        const auto meshes = seeded_meshes(321, 6);
        for (const MeshPair& m : meshes) {
            const GluingData g = compute_gluing(m);
            const TraceNormalSpace t = algorithm1(g, g.cls, 4);
            if (t.n_mu != 2)
                continue;
            BasisOptions raw;
            raw.mu_orthogonalize = false;
            const BasisSet b = generate_basis(m, g, t), r = generate_basis(m, g, t, raw);
            const std::size_t k = b.interface_functions.size();
            const Matrix rows{flatten(b.interface_functions[k - 2]), flatten(b.interface_functions[k - 1]),
                              flatten(r.interface_functions[k - 2]), flatten(r.interface_functions[k - 1])};
            CHECK(rank(rows) == 2);
            CHECK(InnerProduct(m)(b.interface_functions[k - 2], b.interface_functions[k - 1]) == 0);
        }
    }
}
