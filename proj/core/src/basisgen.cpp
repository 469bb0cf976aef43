#include "mixc1/basisgen.hpp"

#include "mixc1/errors.hpp"

#include <algorithm>

namespace mixc1 {

const char* to_string(FunctionalScaling s) { return s == FunctionalScaling::Paper ? "paper" : "unit"; }

FunctionalScaling parse_functional_scaling(std::string_view text)
{
    if (text == "paper")
        return FunctionalScaling::Paper;
    if (text == "unit")
        return FunctionalScaling::Unit;
    throw Error(ErrorCode::Parse, "functional scaling must be 'paper' or 'unit'");
}

std::string Functional::label() const
{
    std::string s = target == ParamBlock::Theta ? "theta" : "omega";
    s += "(t=" + to_string(t);
    if (order)
        s += ",order=" + std::to_string(order);
    return s + ")";
}

std::vector<Functional> FunctionalSet::all() const
{
    std::vector<Functional> out = trace;
    out.insert(out.end(), normal.begin(), normal.end());
    return out;
}

Rational apply(const Functional& f, const Poly& theta, const Poly& omega)
{
    return f.scale * eval_derivative(f.target == ParamBlock::Theta ? theta : omega, f.t, f.order);
}

namespace {

/// 1 / (n)_k, with non-positive products replaced by 1.
Rational inverse_falling(long n, unsigned k)
{
    Integer p = falling_factorial(n, k);
    if (sgn(p) <= 0)
        return 1;
    return ratio(Integer(1), p);
}

} // namespace

FunctionalSet build_functionals(const TraceNormalSpace& tns, FunctionalScaling scaling)
{
    const long nt = tns.n_theta, nw = tns.n_omega;
    if (nt < 2)
        throw Error(ErrorCode::TooFewDofs, "endpoint interpolation needs at least two trace parameters, have " +
                                               std::to_string(nt));
    const bool paper = scaling == FunctionalScaling::Paper;
    const long d = tns.config.d;
    const long dw = tns.omega_degree;
    FunctionalSet fs;
    fs.K = static_cast<unsigned>(std::min((nt - 2) / 2, nw / 2));
    const long K = fs.K;
    for (unsigned j = 0; j <= fs.K; ++j)
        for (int end = 0; end <= 1; ++end)
            fs.trace.push_back({ParamBlock::Theta, Rational(end), j, paper ? inverse_falling(d, j) : Rational(1)});
    for (long i = 1; i <= nt - 2 * K - 2; ++i)
        fs.trace.push_back({ParamBlock::Theta, make_rational(i, nt - 2 * K - 1), 0, 1});
    for (unsigned j = 0; j < fs.K; ++j)
        for (int end = 0; end <= 1; ++end)
            fs.normal.push_back({ParamBlock::Omega, Rational(end), j, paper ? inverse_falling(dw, j + 1) : Rational(1)});
    for (long i = 1; i <= nw - 2 * K; ++i)
        fs.normal.push_back(
            {ParamBlock::Omega, make_rational(i, nw - 2 * K + 1), 0, paper ? inverse_falling(dw, 1) : Rational(1)});
    return fs;
}

FunctionalSet build_point_functionals(const TraceNormalSpace& tns, FunctionalScaling scaling)
{
    const bool paper = scaling == FunctionalScaling::Paper;
    FunctionalSet fs;
    fs.fallback = true;
    const long nt = tns.n_theta, nw = tns.n_omega;
    for (long i = 0; i < nt; ++i)
        fs.trace.push_back({ParamBlock::Theta, nt == 1 ? Rational(0) : make_rational(i, nt - 1), 0, 1});
    for (long i = 1; i <= nw; ++i)
        fs.normal.push_back({ParamBlock::Omega, make_rational(i, nw + 1), 0,
                             paper ? inverse_falling(tns.omega_degree, 1) : Rational(1)});
    return fs;
}

IsoFunction axpy(const IsoFunction& a, const Rational& s, const IsoFunction& b)
{
    if (a.d != b.d || a.kind1 != b.kind1 || a.kind2 != b.kind2)
        throw Error(ErrorCode::DegreeMismatch, "combining functions with different layouts");
    IsoFunction out = a;
    for (const auto& [ij, x] : b.net1)
        out.net1[ij] += s * x;
    for (const auto& [ij, x] : b.net2)
        out.net2[ij] += s * x;
    return out;
}

IsoFunction assemble_net(const GluingData& g, const Poly& theta, const Poly& eta1, const Poly& eta2,
                         const InteriorCoefficients& interior, unsigned d)
{
    if (deg_or_neg(theta) > static_cast<int>(d))
        throw Error(ErrorCode::DegreeMismatch, "trace degree exceeds d");
    IsoFunction f;
    f.d = d;
    f.kind1 = g.sigma1 ? DomainKind::Square : DomainKind::Triangle;
    f.kind2 = g.sigma2 ? DomainKind::Square : DomainKind::Triangle;
    for (const auto& ij : net_indices(f.kind1, d))
        f.net1[ij] = 0;
    for (const auto& ij : net_indices(f.kind2, d))
        f.net2[ij] = 0;

    const auto row0 = to_bernstein(theta, d);
    for (int ell = 1; ell <= 2; ++ell) {
        BezierNet& net = ell == 1 ? f.net1 : f.net2;
        const Poly& e = ell == 1 ? eta1 : eta2;
        const int sigma = g.sigma_of(ell);
        const unsigned de = d - 1 + static_cast<unsigned>(sigma);
        if (deg_or_neg(e) > static_cast<int>(de))
            throw Error(ErrorCode::DegreeMismatch, "eta_" + std::to_string(ell) + " exceeds degree " + std::to_string(de));
        const auto row1 = to_bernstein(e, de);
        for (unsigned j = 0; j <= d; ++j)
            net[{0, j}] = row0[j];
        for (unsigned j = 0; j <= de; ++j)
            net[{1, j}] = row0[j] + row1[j] / Rational(d);
    }
    for (const auto& [key, value] : interior) {
        const auto [ell, i, j] = key;
        if (i < 2)
            throw Error(ErrorCode::InvalidArgument, "interior coefficients start at row 2");
        BezierNet& net = ell == 1 ? f.net1 : f.net2;
        auto it = net.find({i, j});
        if (it == net.end())
            throw Error(ErrorCode::DegreeMismatch, "interior index outside the net layout");
        it->second = value;
    }
    return f;
}

IsoFunction iso_from_trace(const GluingData& g, const Poly& theta, const Poly& omega, unsigned d)
{
    return assemble_net(g, theta, eta(g, theta, omega, 1, d), eta(g, theta, omega, 2, d), {}, d);
}

std::vector<IsoFunction> interior_block(unsigned d, ElementKind kind1, ElementKind kind2)
{
    auto dom = [](ElementKind k) { return k == ElementKind::Triangle ? DomainKind::Triangle : DomainKind::Square; };
    IsoFunction zero;
    zero.d = d;
    zero.kind1 = dom(kind1);
    zero.kind2 = dom(kind2);
    for (const auto& ij : net_indices(zero.kind1, d))
        zero.net1[ij] = 0;
    for (const auto& ij : net_indices(zero.kind2, d))
        zero.net2[ij] = 0;
    std::vector<IsoFunction> out;
    for (int ell = 1; ell <= 2; ++ell)
        for (const auto& ij : net_indices(zero.kind(ell), d)) {
            if (ij.first < 2)
                continue;
            IsoFunction f = zero;
            (ell == 1 ? f.net1 : f.net2)[ij] = 1;
            f.tag = "interior" + std::to_string(ell) + "(" + std::to_string(ij.first) + "," +
                    std::to_string(ij.second) + ")";
            out.push_back(std::move(f));
        }
    return out;
}

InnerProduct::InnerProduct(const MeshPair& m)
{
    for (int ell = 1; ell <= 2; ++ell) {
        BiPoly det = jacobian_det(m, ell);
        const int s = sgn(restrict_u0(det)(0));
        if (s == 0 || sgn(integrate_reference(det)) != s)
            throw Error(ErrorCode::MixedOrientation,
                        "Jacobian determinant of element " + std::to_string(ell) + " changes orientation");
        weight_[static_cast<std::size_t>(ell - 1)] = s > 0 ? det : det * Rational(-1);
    }
}

Rational InnerProduct::operator()(const IsoFunction& f, const IsoFunction& h) const
{
    Rational acc = 0;
    for (int ell = 1; ell <= 2; ++ell)
        acc += integrate_reference(f.bipoly(ell) * h.bipoly(ell) * weight_[static_cast<std::size_t>(ell - 1)]);
    return acc;
}

Rational inner_product(const IsoFunction& f, const IsoFunction& h, const MeshPair& m)
{
    return InnerProduct(m)(f, h);
}

namespace {

std::vector<std::size_t> collocation_columns(const TraceNormalSpace& tns)
{
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < tns.params.size(); ++k)
        if (tns.params[k].block != ParamBlock::Mu)
            cols.push_back(k);
    return cols;
}

} // namespace

Matrix collocation_matrix(const TraceNormalSpace& tns, const FunctionalSet& fs)
{
    const auto cols = collocation_columns(tns);
    const auto funcs = fs.all();
    if (funcs.size() != cols.size())
        throw Error(ErrorCode::InternalInconsistency, std::to_string(funcs.size()) + " functionals for " +
                                                          std::to_string(cols.size()) + " parameters");
    Matrix m(funcs.size(), std::vector<Rational>(cols.size()));
    for (std::size_t r = 0; r < funcs.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            m[r][c] = apply(funcs[r], tns.params[cols[c]].theta, tns.params[cols[c]].omega);
    return m;
}

BasisSet collocate(const MeshPair& m, const GluingData& g, const TraceNormalSpace& tns, const FunctionalSet& fs,
                   const BasisOptions& options)
{
    BasisSet out;
    out.functionals = fs;
    out.collocation = collocation_matrix(tns, fs);
    const auto cols = collocation_columns(tns);
    const auto funcs = fs.all();
    const auto inv = inverse(out.collocation);
    if (!inv)
        throw Error(ErrorCode::SingularCollocation,
                    "collocation matrix is singular; try different interior nodes or the other scaling");
    const unsigned d = tns.config.d;
    const std::size_t n = cols.size();

    for (std::size_t k = 0; k < n; ++k) {
        Poly theta, omega;
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& w = (*inv)[c][k];
            if (sgn(w) == 0)
                continue;
            theta += tns.params[cols[c]].theta * w;
            omega += tns.params[cols[c]].omega * w;
        }
        IsoFunction f = iso_from_trace(g, theta, omega, d);
        f.tag = funcs[k].label();
        out.interface_functions.push_back(std::move(f));
        out.interface_traces.emplace_back(std::move(theta), std::move(omega));
    }

    std::vector<std::size_t> mu_rows;
    for (std::size_t k = 0; k < tns.params.size(); ++k) {
        const FreeParam& p = tns.params[k];
        if (p.block != ParamBlock::Mu)
            continue;
        // zero interpolation data: coefficients c = -M^{-1} F(mu direction)
        std::vector<Rational> rhs(n);
        for (std::size_t r = 0; r < n; ++r)
            rhs[r] = apply(funcs[r], p.theta, p.omega);
        Poly theta = p.theta, omega = p.omega;
        for (std::size_t c = 0; c < n; ++c) {
            Rational w = 0;
            for (std::size_t r = 0; r < n; ++r)
                w -= (*inv)[c][r] * rhs[r];
            if (sgn(w) == 0)
                continue;
            theta += tns.params[cols[c]].theta * w;
            omega += tns.params[cols[c]].omega * w;
        }
        IsoFunction f = iso_from_trace(g, theta, omega, d);
        f.tag = p.name;
        mu_rows.push_back(out.interface_functions.size());
        out.interface_functions.push_back(std::move(f));
        out.interface_traces.emplace_back(std::move(theta), std::move(omega));
    }

    if (options.mu_orthogonalize && mu_rows.size() == 2) {
        const InnerProduct ip(m);
        const IsoFunction& g1 = out.interface_functions[mu_rows[0]];
        IsoFunction& g2 = out.interface_functions[mu_rows[1]];
        const Rational s = -ip(g2, g1) / ip(g1, g1);
        g2 = axpy(g2, s, g1);
        auto& t1 = out.interface_traces[mu_rows[0]];
        auto& t2 = out.interface_traces[mu_rows[1]];
        t2.first += t1.first * s;
        t2.second += t1.second * s;
    }
    return out;
}

BasisSet generate_basis(const MeshPair& m, const GluingData& g, const TraceNormalSpace& tns,
                        const BasisOptions& options)
{
    FunctionalSet fs;
    try {
        fs = build_functionals(tns, options.scaling);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooFewDofs)
            throw;
        fs = build_point_functionals(tns, options.scaling);
    }
    BasisSet out = collocate(m, g, tns, fs, options);
    out.interior_functions = interior_block(tns.config.d, m.elem1.kind(), m.elem2.kind());
    return out;
}

} // namespace mixc1
