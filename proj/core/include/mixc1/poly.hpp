#pragma once

#include "mixc1/rational.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mixc1 {

/// Univariate polynomial over the rationals, monomial storage.
/// coeffs()[i] is the coefficient of v^i; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, unsigned power);
    /// c0 + c1 v
    static Poly linear(const Rational& c0, const Rational& c1);

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// std::nullopt for the zero polynomial.
    std::optional<int> degree() const;

    /// Coefficient of v^k (cf(p; k)); zero outside the stored range.
    Rational coeff(long k) const;
    Rational leading() const;

    Rational operator()(const Rational& t) const;
    double eval(double t) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const Rational& s);

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

struct QuoRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws DivisionByZero for q = 0.
QuoRem quo_rem(const Poly& p, const Poly& q);

/// True when q divides p exactly.
bool divides(const Poly& q, const Poly& p);

struct GcdResult {
    Poly gcd;
    /// False when gcd(0) = 0 and the leading coefficient was used for normalization instead.
    bool normalized_at_zero = true;
};

/// gcd scaled to g(0) = 1 (or monic when g(0) = 0). Throws BothZero.
GcdResult gcd_normalized(const Poly& p, const Poly& q);

Poly differentiate(const Poly& p);
Poly differentiate(const Poly& p, unsigned order);
/// Antiderivative vanishing at 0.
Poly integrate_from_zero(const Poly& p);

Rational eval_derivative(const Poly& p, const Rational& t, unsigned order);

/// p(q(v))
Poly compose(const Poly& p, const Poly& q);

enum class UnitSign { Positive, Negative, HasZero };

/// Exact sign decision on the closed interval [0, 1] using a Sturm sequence.
UnitSign sign_constant_on_unit_interval(const Poly& p);

const char* to_string(UnitSign s);

} // namespace mixc1
