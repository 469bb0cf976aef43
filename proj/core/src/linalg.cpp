#include "mixc1/linalg.hpp"

#include "mixc1/errors.hpp"

#include <utility>

namespace mixc1 {

namespace {

std::vector<std::vector<Integer>> integer_rows(const Matrix& a)
{
    std::vector<std::vector<Integer>> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        Integer l = 1;
        for (const auto& x : row)
            if (sgn(x) != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto& x : row)
            r.push_back(x.get_num() * (l / x.get_den()));
        out.push_back(std::move(r));
    }
    return out;
}

void require_square(const Matrix& a)
{
    for (const auto& row : a)
        if (row.size() != a.size())
            throw Error(ErrorCode::InvalidArgument, "matrix is not square");
}

} // namespace

std::size_t rank(const Matrix& a)
{
    auto m = integer_rows(a);
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::optional<Matrix> inverse(const Matrix& a)
{
    require_square(a);
    const std::size_t n = a.size();
    Matrix m = a;
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        const Rational piv = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(m[i][c]) == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b)
{
    require_square(a);
    if (b.size() != a.size())
        throw Error(ErrorCode::InvalidArgument, "right-hand side size mismatch");
    const std::size_t n = a.size();
    Matrix m = a;
    std::vector<Rational> x = b;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(x[p], x[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0)
                continue;
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
            x[i] -= f * x[c];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        Rational s = x[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return x;
}

Rational determinant(const Matrix& a)
{
    require_square(a);
    const std::size_t n = a.size();
    Matrix m = a;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0)
                continue;
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

} // namespace mixc1
