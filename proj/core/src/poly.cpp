#include "mixc1/poly.hpp"

#include "mixc1/errors.hpp"

#include <algorithm>

namespace mixc1 {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, unsigned power)
{
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rational& c0, const Rational& c1) { return Poly(std::vector<Rational>{c0, c1}); }

void Poly::normalize()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

std::optional<int> Poly::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

Rational Poly::coeff(long k) const
{
    if (k < 0 || k >= static_cast<long>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& t) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

double Poly::eval(double t) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + it->get_d();
    return acc;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r));
}

Poly operator/(Poly a, const Rational& s)
{
    if (sgn(s) == 0)
        throw Error(ErrorCode::DivisionByZero, "polynomial divided by zero scalar");
    for (auto& c : a.coeffs_)
        c /= s;
    return a;
}

QuoRem quo_rem(const Poly& p, const Poly& q)
{
    if (q.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    const int dq = *q.degree();
    std::vector<Rational> rem = p.coeffs();
    if (static_cast<int>(rem.size()) - 1 < dq)
        return {Poly{}, p};
    std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(dq));
    const Rational& lead = q.coeffs().back();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dq; --k) {
        if (sgn(rem[static_cast<std::size_t>(k)]) == 0)
            continue;
        Rational f = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - dq)] = f;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<std::size_t>(k - dq + j)] -= f * q.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool divides(const Poly& q, const Poly& p) { return quo_rem(p, q).remainder.is_zero(); }

GcdResult gcd_normalized(const Poly& p, const Poly& q)
{
    if (p.is_zero() && q.is_zero())
        throw Error(ErrorCode::BothZero, "gcd of two zero polynomials");
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly r = quo_rem(a, b).remainder;
        a = std::move(b);
        // keep the working remainder monic to limit coefficient growth
        b = r.is_zero() ? r : r / r.leading();
    }
    GcdResult out;
    Rational at0 = a.coeff(0);
    if (sgn(at0) != 0) {
        out.gcd = a / at0;
    } else {
        out.gcd = a / a.leading();
        out.normalized_at_zero = false;
    }
    return out;
}

Poly differentiate(const Poly& p)
{
    if (p.coeffs().size() <= 1)
        return {};
    std::vector<Rational> r(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        r[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return Poly(std::move(r));
}

Poly differentiate(const Poly& p, unsigned order)
{
    Poly r = p;
    for (unsigned k = 0; k < order && !r.is_zero(); ++k)
        r = differentiate(r);
    return r;
}

Poly integrate_from_zero(const Poly& p)
{
    if (p.is_zero())
        return {};
    std::vector<Rational> r(p.coeffs().size() + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        r[i + 1] = p.coeffs()[i] / Rational(static_cast<unsigned long>(i + 1));
    return Poly(std::move(r));
}

Rational eval_derivative(const Poly& p, const Rational& t, unsigned order)
{
    // sum_k k!/(k-order)! c_k t^(k-order)
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > order;) {
        Rational term = c[k] * Rational(falling_factorial(static_cast<long>(k), order));
        acc = acc * t + term;
    }
    return acc;
}

Poly compose(const Poly& p, const Poly& q)
{
    Poly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * q + Poly::constant(*it);
    return acc;
}

namespace {

int sign_changes(const std::vector<Poly>& seq, const Rational& t)
{
    int changes = 0, last = 0;
    for (const auto& s : seq) {
        int sg = sgn(s(t));
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

} // namespace

UnitSign sign_constant_on_unit_interval(const Poly& p)
{
    if (p.is_zero())
        return UnitSign::HasZero;
    const Rational zero = 0, one = 1;
    const int s0 = sgn(p(zero));
    if (s0 == 0 || sgn(p(one)) == 0)
        return UnitSign::HasZero;
    if (p.is_constant())
        return s0 > 0 ? UnitSign::Positive : UnitSign::Negative;

    std::vector<Poly> seq{p, differentiate(p)};
    while (!seq.back().is_zero()) {
        Poly r = quo_rem(seq[seq.size() - 2], seq.back()).remainder;
        if (r.is_zero())
            break;
        // scaling by a positive factor keeps sign patterns intact
        Rational lead = r.leading();
        if (lead < 0)
            lead = -lead;
        seq.push_back(-(r / lead));
    }
    const int roots = sign_changes(seq, zero) - sign_changes(seq, one);
    if (roots > 0)
        return UnitSign::HasZero;
    return s0 > 0 ? UnitSign::Positive : UnitSign::Negative;
}

const char* to_string(UnitSign s)
{
    switch (s) {
    case UnitSign::Positive: return "positive";
    case UnitSign::Negative: return "negative";
    case UnitSign::HasZero: return "has_zero";
    }
    return "?";
}

} // namespace mixc1
