#pragma once

#include "mixc1/poly.hpp"

#include <vector>

namespace mixc1 {

enum class DomainKind { Triangle, Square };

/// Bivariate polynomial in (u, v), monomial storage c(i, j) = coefficient of u^i v^j.
/// The kind records which reference domain it lives on (integration, degree bounds).
class BiPoly {
public:
    explicit BiPoly(DomainKind kind = DomainKind::Square) : kind_(kind) {}
    BiPoly(DomainKind kind, std::vector<std::vector<Rational>> coeffs);

    static BiPoly constant(DomainKind kind, const Rational& c);
    /// Polynomial in v only.
    static BiPoly from_v(DomainKind kind, const Poly& p);
    /// Polynomial in u only.
    static BiPoly from_u(DomainKind kind, const Poly& p);

    DomainKind kind() const { return kind_; }

    /// Coefficient of u^i v^j; zero outside the stored range.
    Rational coeff(unsigned i, unsigned j) const;
    void add_to(unsigned i, unsigned j, const Rational& value);

    /// Exclusive bounds of the stored coefficient block.
    unsigned size_u() const { return static_cast<unsigned>(c_.size()); }
    unsigned size_v() const;

    bool is_zero() const;
    /// Max over nonzero terms of i + j; -1 when zero.
    int total_degree() const;
    /// Max exponent of u (resp. v) over nonzero terms; -1 when zero.
    int degree_u() const;
    int degree_v() const;

    Rational operator()(const Rational& u, const Rational& v) const;
    double eval(double u, double v) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    friend bool operator==(const BiPoly& a, const BiPoly& b);

private:
    void trim();

    DomainKind kind_;
    std::vector<std::vector<Rational>> c_;
};

BiPoly partial_u(const BiPoly& f);
BiPoly partial_v(const BiPoly& f);

/// f(0, v) as a polynomial in v.
Poly restrict_u0(const BiPoly& f);

/// Exact integral over the reference triangle {u, v >= 0, u + v <= 1} or the unit square,
/// according to f.kind().
Rational integrate_reference(const BiPoly& f);

} // namespace mixc1
