#include "mixc1/verify.hpp"

#include "mixc1/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace mixc1 {

namespace {

void residuals(const BiPoly& f1, const BiPoly& f2, const GluingData& g, Poly& trace, Poly& identity)
{
    trace = restrict_u0(f1) - restrict_u0(f2);
    identity = g.alpha_tilde1 * restrict_u0(partial_u(f2)) - g.alpha_tilde2 * restrict_u0(partial_u(f1)) +
               g.alpha * restrict_u0(partial_v(f1));
}

} // namespace

C1Report c1_identity_check(const IsoFunction& f, const GluingData& g)
{
    C1Report r;
    residuals(f.bipoly(1), f.bipoly(2), g, r.trace_residual, r.identity_residual);
    r.pass = r.trace_residual.is_zero() && r.identity_residual.is_zero();
    return r;
}

OracleResult dimension_oracle(const MeshPair& m, const GluingData& g, unsigned d)
{
    const auto idx1 = net_indices(m.elem1.domain(), d);
    const auto idx2 = net_indices(m.elem2.domain(), d);
    std::vector<std::pair<Poly, Poly>> columns;
    std::size_t trace_len = 0, identity_len = 0;
    const BiPoly zero1(m.elem1.domain()), zero2(m.elem2.domain());
    for (int ell = 1; ell <= 2; ++ell)
        for (const auto& ij : ell == 1 ? idx1 : idx2) {
            BezierNet net{{ij, Rational(1)}};
            BiPoly b = net_to_bipoly(net, ell == 1 ? m.elem1.domain() : m.elem2.domain(), d);
            Poly t, id;
            residuals(ell == 1 ? b : zero1, ell == 2 ? b : zero2, g, t, id);
            trace_len = std::max(trace_len, t.coeffs().size());
            identity_len = std::max(identity_len, id.coeffs().size());
            columns.emplace_back(std::move(t), std::move(id));
        }
    Matrix a(trace_len + identity_len, std::vector<Rational>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t k = 0; k < trace_len; ++k)
            a[k][c] = columns[c].first.coeff(static_cast<long>(k));
        for (std::size_t k = 0; k < identity_len; ++k)
            a[trace_len + k][c] = columns[c].second.coeff(static_cast<long>(k));
    }
    OracleResult r;
    r.rows = a.size();
    r.cols = columns.size();
    r.rank = rank(a);
    r.nullspace_dim = r.cols - r.rank;
    return r;
}

namespace {

std::array<double, 2> physical_gradient(const BiPoly& f, const Element& e, double u, double v)
{
    const double fu = partial_u(f).eval(u, v), fv = partial_v(f).eval(u, v);
    const double xu = partial_u(e.fx()).eval(u, v), yu = partial_u(e.fy()).eval(u, v);
    const double xv = partial_v(e.fx()).eval(u, v), yv = partial_v(e.fy()).eval(u, v);
    const double det = xu * yv - yu * xv;
    // (fu perp(Fv) - fv perp(Fu)) / det
    return {(fu * yv - fv * yu) / det, (-fu * xv + fv * xu) / det};
}

} // namespace

double gradient_jump(const IsoFunction& f, const MeshPair& m, unsigned samples)
{
    const BiPoly f1 = f.bipoly(1), f2 = f.bipoly(2);
    double worst = 0.0;
    for (unsigned s = 0; s < samples; ++s) {
        const double v = samples == 1 ? 0.0 : static_cast<double>(s) / (samples - 1);
        const auto g1 = physical_gradient(f1, m.elem1, 0.0, v);
        const auto g2 = physical_gradient(f2, m.elem2, 0.0, v);
        worst = std::max(worst, std::hypot(g1[0] - g2[0], g1[1] - g2[1]));
    }
    return worst;
}

double condition_number(const Matrix& a)
{
    if (a.empty())
        return 1.0;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(a.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j].get_d();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0)
        return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

double condition_number(const BasisSet& b) { return condition_number(b.collocation); }

std::vector<SampleRow> sample_surface(const IsoFunction& f, const MeshPair& m, unsigned n)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "sample grid needs n >= 1");
    std::vector<SampleRow> rows;
    for (int ell = 1; ell <= 2; ++ell) {
        const BiPoly b = f.bipoly(ell);
        const Element& e = m.element(ell);
        for (unsigned i = 0; i <= n; ++i)
            for (unsigned j = 0; j <= n; ++j) {
                if (e.kind() == ElementKind::Triangle && i + j > n)
                    continue;
                const double u = static_cast<double>(i) / n, v = static_cast<double>(j) / n;
                const auto xy = e.eval(u, v);
                rows.push_back({ell, u, v, xy[0], xy[1], b.eval(u, v)});
            }
    }
    return rows;
}

std::string samples_to_csv(const std::vector<SampleRow>& rows)
{
    std::string out = "elem,u,v,x,y,value\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.elem, r.u, r.v, r.x, r.y, r.value);
        out += buf;
    }
    return out;
}

} // namespace mixc1
