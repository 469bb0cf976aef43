#include "mixc1/bipoly.hpp"

#include "mixc1/errors.hpp"

#include <algorithm>

namespace mixc1 {

BiPoly::BiPoly(DomainKind kind, std::vector<std::vector<Rational>> coeffs) : kind_(kind), c_(std::move(coeffs))
{
    trim();
}

BiPoly BiPoly::constant(DomainKind kind, const Rational& c)
{
    return BiPoly(kind, {{c}});
}

BiPoly BiPoly::from_v(DomainKind kind, const Poly& p)
{
    return BiPoly(kind, {p.coeffs()});
}

BiPoly BiPoly::from_u(DomainKind kind, const Poly& p)
{
    std::vector<std::vector<Rational>> c;
    for (const auto& x : p.coeffs())
        c.push_back({x});
    return BiPoly(kind, std::move(c));
}

void BiPoly::trim()
{
    for (auto& row : c_)
        while (!row.empty() && sgn(row.back()) == 0)
            row.pop_back();
    while (!c_.empty() && c_.back().empty())
        c_.pop_back();
}

unsigned BiPoly::size_v() const
{
    std::size_t m = 0;
    for (const auto& row : c_)
        m = std::max(m, row.size());
    return static_cast<unsigned>(m);
}

Rational BiPoly::coeff(unsigned i, unsigned j) const
{
    if (i >= c_.size() || j >= c_[i].size())
        return 0;
    return c_[i][j];
}

void BiPoly::add_to(unsigned i, unsigned j, const Rational& value)
{
    if (sgn(value) == 0)
        return;
    if (i >= c_.size())
        c_.resize(i + 1);
    if (j >= c_[i].size())
        c_[i].resize(j + 1);
    c_[i][j] += value;
    trim();
}

bool BiPoly::is_zero() const { return c_.empty(); }

int BiPoly::total_degree() const
{
    int d = -1;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j)
            if (sgn(c_[i][j]) != 0)
                d = std::max(d, static_cast<int>(i + j));
    return d;
}

int BiPoly::degree_u() const { return static_cast<int>(c_.size()) - 1; }

int BiPoly::degree_v() const { return static_cast<int>(size_v()) - 1; }

Rational BiPoly::operator()(const Rational& u, const Rational& v) const
{
    Rational acc = 0;
    for (auto row = c_.rbegin(); row != c_.rend(); ++row) {
        Rational inner = 0;
        for (auto it = row->rbegin(); it != row->rend(); ++it)
            inner = inner * v + *it;
        acc = acc * u + inner;
    }
    return acc;
}

double BiPoly::eval(double u, double v) const
{
    double acc = 0.0;
    for (auto row = c_.rbegin(); row != c_.rend(); ++row) {
        double inner = 0.0;
        for (auto it = row->rbegin(); it != row->rend(); ++it)
            inner = inner * v + it->get_d();
        acc = acc * u + inner;
    }
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        if (o.c_[i].size() > c_[i].size())
            c_[i].resize(o.c_[i].size());
        for (std::size_t j = 0; j < o.c_[i].size(); ++j)
            c_[i][j] += o.c_[i][j];
    }
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        if (o.c_[i].size() > c_[i].size())
            c_[i].resize(o.c_[i].size());
        for (std::size_t j = 0; j < o.c_[i].size(); ++j)
            c_[i][j] -= o.c_[i][j];
    }
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s)
{
    for (auto& row : c_)
        for (auto& x : row)
            x *= s;
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    if (a.kind_ != b.kind_)
        throw Error(ErrorCode::InvalidArgument, "product of bivariate polynomials on different domains");
    if (a.is_zero() || b.is_zero())
        return BiPoly(a.kind_);
    std::vector<std::vector<Rational>> r(a.c_.size() + b.c_.size() - 1,
                                         std::vector<Rational>(a.size_v() + b.size_v()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
            if (sgn(a.c_[i][j]) == 0)
                continue;
            for (std::size_t k = 0; k < b.c_.size(); ++k)
                for (std::size_t l = 0; l < b.c_[k].size(); ++l)
                    r[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
        }
    return BiPoly(a.kind_, std::move(r));
}

bool operator==(const BiPoly& a, const BiPoly& b) { return a.kind_ == b.kind_ && a.c_ == b.c_; }

BiPoly partial_u(const BiPoly& f)
{
    std::vector<std::vector<Rational>> r;
    for (unsigned i = 1; i < f.size_u(); ++i) {
        std::vector<Rational> row(f.size_v());
        for (unsigned j = 0; j < f.size_v(); ++j)
            row[j] = f.coeff(i, j) * i;
        r.push_back(std::move(row));
    }
    return BiPoly(f.kind(), std::move(r));
}

BiPoly partial_v(const BiPoly& f)
{
    std::vector<std::vector<Rational>> r;
    for (unsigned i = 0; i < f.size_u(); ++i) {
        std::vector<Rational> row;
        for (unsigned j = 1; j < f.size_v(); ++j)
            row.push_back(f.coeff(i, j) * j);
        r.push_back(std::move(row));
    }
    return BiPoly(f.kind(), std::move(r));
}

Poly restrict_u0(const BiPoly& f)
{
    std::vector<Rational> r;
    for (unsigned j = 0; j < f.size_v(); ++j)
        r.push_back(f.coeff(0, j));
    return Poly(std::move(r));
}

Rational integrate_reference(const BiPoly& f)
{
    Rational acc = 0;
    for (unsigned i = 0; i < f.size_u(); ++i)
        for (unsigned j = 0; j < f.size_v(); ++j) {
            Rational c = f.coeff(i, j);
            if (sgn(c) == 0)
                continue;
            if (f.kind() == DomainKind::Square)
                acc += c / Rational(static_cast<unsigned long>((i + 1) * (j + 1)));
            else
                acc += c * ratio(factorial(i) * factorial(j), factorial(i + j + 2));
        }
    return acc;
}

} // namespace mixc1
