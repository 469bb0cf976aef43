#include "mixc1/bernstein.hpp"

#include "mixc1/errors.hpp"

#include <string>

namespace mixc1 {

std::vector<Rational> bernstein_convert(std::span<const Rational> coeffs, unsigned d, BernsteinDirection direction)
{
    if (direction == BernsteinDirection::FromMonomial) {
        Poly p(std::vector<Rational>(coeffs.begin(), coeffs.end()));
        return to_bernstein(p, d);
    }
    if (coeffs.size() != d + 1)
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(d + 1) + " Bernstein coefficients, got " + std::to_string(coeffs.size()));
    return from_bernstein(coeffs).coeffs();
}

std::vector<Rational> to_bernstein(const Poly& p, unsigned d)
{
    if (p.degree() && *p.degree() > static_cast<int>(d))
        throw Error(ErrorCode::DegreeOverflow,
                    "degree " + std::to_string(*p.degree()) + " does not fit Bernstein degree " + std::to_string(d));
    // b_k = sum_{i <= k} C(k, i) / C(d, i) a_i
    std::vector<Rational> b(d + 1);
    for (unsigned k = 0; k <= d; ++k)
        for (unsigned i = 0; i <= k && i < p.coeffs().size(); ++i)
            if (sgn(p.coeffs()[i]) != 0)
                b[k] += p.coeffs()[i] * ratio(binomial(k, i), binomial(d, i));
    return b;
}

Poly from_bernstein(std::span<const Rational> b)
{
    if (b.empty())
        return {};
    const unsigned d = static_cast<unsigned>(b.size()) - 1;
    // a_i = C(d, i) sum_{k <= i} (-1)^(i-k) C(i, k) b_k
    std::vector<Rational> a(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        Rational s = 0;
        for (unsigned k = 0; k <= i; ++k) {
            Rational t = b[k] * Rational(binomial(i, k));
            if ((i - k) % 2)
                s -= t;
            else
                s += t;
        }
        a[i] = s * Rational(binomial(d, i));
    }
    return Poly(std::move(a));
}

Poly bernstein_basis(unsigned d, unsigned i)
{
    std::vector<Rational> b(d + 1);
    b[i] = 1;
    return from_bernstein(b);
}

std::vector<std::pair<unsigned, unsigned>> net_indices(DomainKind kind, unsigned d)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i <= d; ++i)
        for (unsigned j = 0; j <= d; ++j)
            if (kind == DomainKind::Square || i + j <= d)
                out.emplace_back(i, j);
    return out;
}

namespace {

BiPoly triangle_basis(unsigned d, unsigned i, unsigned j)
{
    // d!/(i! j! k!) u^i v^j (1-u-v)^k
    const unsigned k = d - i - j;
    const Rational lead(factorial(d) / (factorial(i) * factorial(j) * factorial(k)));
    BiPoly out(DomainKind::Triangle);
    for (unsigned a = 0; a <= k; ++a)
        for (unsigned b = 0; a + b <= k; ++b) {
            Rational c = lead * Rational(factorial(k) / (factorial(a) * factorial(b) * factorial(k - a - b)));
            if ((a + b) % 2)
                c = -c;
            out.add_to(i + a, j + b, c);
        }
    return out;
}

} // namespace

BiPoly net_to_bipoly(const BezierNet& net, DomainKind kind, unsigned d)
{
    BiPoly out(kind);
    if (kind == DomainKind::Square) {
        std::vector<Poly> basis;
        for (unsigned i = 0; i <= d; ++i)
            basis.push_back(bernstein_basis(d, i));
        for (const auto& [ij, value] : net) {
            if (sgn(value) == 0)
                continue;
            if (ij.first > d || ij.second > d)
                throw Error(ErrorCode::DegreeMismatch, "net index outside the square layout");
            const auto& bu = basis[ij.first].coeffs();
            const auto& bv = basis[ij.second].coeffs();
            for (unsigned a = 0; a < bu.size(); ++a)
                for (unsigned b = 0; b < bv.size(); ++b)
                    out.add_to(a, b, value * bu[a] * bv[b]);
        }
        return out;
    }
    for (const auto& [ij, value] : net) {
        if (sgn(value) == 0)
            continue;
        if (ij.first + ij.second > d)
            throw Error(ErrorCode::DegreeMismatch, "net index outside the triangle layout");
        out += triangle_basis(d, ij.first, ij.second) * value;
    }
    return out;
}

BezierNet bipoly_to_net(const BiPoly& f, DomainKind kind, unsigned d)
{
    if (kind == DomainKind::Triangle ? f.total_degree() > static_cast<int>(d)
                                     : (f.degree_u() > static_cast<int>(d) || f.degree_v() > static_cast<int>(d)))
        throw Error(ErrorCode::DegreeOverflow, "bivariate polynomial exceeds the net degree " + std::to_string(d));
    BezierNet net;
    for (const auto& ij : net_indices(kind, d))
        net[ij] = 0;
    // Coefficient of B_{ij} for u^a v^b: (i)_a (j)_b / (d)_{a+b} (triangle), (i)_a (j)_b / ((d)_a (d)_b) (square).
    for (unsigned a = 0; a < f.size_u(); ++a)
        for (unsigned b = 0; b < f.size_v(); ++b) {
            Rational c = f.coeff(a, b);
            if (sgn(c) == 0)
                continue;
            const Integer denom = kind == DomainKind::Triangle ? falling_factorial(d, a + b)
                                                               : Integer(falling_factorial(d, a) * falling_factorial(d, b));
            for (auto& [ij, value] : net) {
                if (ij.first < a || ij.second < b)
                    continue;
                value += c * ratio(falling_factorial(ij.first, a) * falling_factorial(ij.second, b), denom);
            }
        }
    return net;
}

} // namespace mixc1
