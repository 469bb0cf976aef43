#include "mixc1/c1space.hpp"

#include "mixc1/bernstein.hpp"
#include "mixc1/errors.hpp"

#include <algorithm>
#include <array>

namespace mixc1 {

const char* to_string(ParamBlock b)
{
    switch (b) {
    case ParamBlock::Theta: return "theta";
    case ParamBlock::Omega: return "omega";
    case ParamBlock::Mu: return "mu";
    }
    return "?";
}

namespace {

int min_sigma_minus_deg_alpha(const GluingData& g)
{
    return std::min(g.sigma1 - deg_or_neg(g.alpha1), g.sigma2 - deg_or_neg(g.alpha2));
}

/// Element attaining the minimum in d_omega; ties go to 1.
int omega_limiting_element(const GluingData& g)
{
    return g.sigma1 - deg_or_neg(g.alpha1) <= g.sigma2 - deg_or_neg(g.alpha2) ? 1 : 2;
}

std::string indexed(const char* stem, unsigned i) { return std::string(stem) + "_" + std::to_string(i); }

void check_directions(const GluingData& g, const TraceNormalSpace& tns)
{
    for (const auto& p : tns.params)
        if (!admissible(g, p.theta, p.omega, tns.config.d))
            throw Error(ErrorCode::InternalInconsistency,
                        "direction " + p.name + " of branch " + tns.branch + " violates the C1 conditions");
}

void require_degree(unsigned d)
{
    if (d < 2)
        throw Error(ErrorCode::InvalidArgument, "degree must be at least 2");
}

/// theta0, then theta = int_0^v B^{d_tau}_i beta.
void push_trace_block(TraceNormalSpace& tns, const GluingData& g)
{
    tns.params.push_back({"theta0", ParamBlock::Theta, Poly::constant(1), {}});
    for (int i = 0; i <= tns.config.d_tau; ++i)
        tns.params.push_back({indexed("tau", static_cast<unsigned>(i)), ParamBlock::Theta,
                              integrate_from_zero(bernstein_basis(static_cast<unsigned>(tns.config.d_tau),
                                                                  static_cast<unsigned>(i)) *
                                                  g.beta),
                              {}});
}

/// omega = B^{d_omega}_i beta.
void push_normal_block(TraceNormalSpace& tns, const GluingData& g)
{
    for (int i = 0; i <= tns.config.d_omega; ++i)
        tns.params.push_back({indexed("omega", static_cast<unsigned>(i)), ParamBlock::Omega, {},
                              bernstein_basis(static_cast<unsigned>(tns.config.d_omega), static_cast<unsigned>(i)) *
                                  g.beta});
}

void count_blocks(TraceNormalSpace& tns)
{
    tns.n_theta = tns.n_omega = tns.n_mu = 0;
    for (const auto& p : tns.params) {
        switch (p.block) {
        case ParamBlock::Theta: ++tns.n_theta; break;
        case ParamBlock::Omega: ++tns.n_omega; break;
        case ParamBlock::Mu: ++tns.n_mu; break;
        }
    }
}

struct MuPair {
    std::array<Poly, 2> tau;
    std::array<Poly, 2> omega;
    std::string branch;
    int L = 0;
};

bool proportional(const Poly& p, const Poly& q)
{
    // p = c q for some constant c (q nonzero)
    return p == q * (p.is_zero() ? Rational(0) : p.leading() / q.leading());
}

/// Writes p(v) in powers of s = q(v) for linear q: returns coefficients in s.
std::vector<Rational> in_powers_of(const Poly& p, const Poly& q)
{
    const Rational p0 = q.coeff(0), p1 = q.coeff(1);
    const Poly back = Poly::linear(-p0 / p1, 1 / p1);
    const Poly c = compose(p, back);
    std::vector<Rational> out(3);
    for (int k = 0; k < 3; ++k)
        out[k] = c.coeff(k);
    return out;
}

std::optional<MuPair> lemma6(const GluingData& g)
{
    const Poly& A1 = g.hat_alpha1;
    const Poly& A2 = g.hat_alpha2;
    const Poly& B1 = g.hat_beta1;
    const Poly& B2 = g.hat_beta2;
    const Poly v = Poly::monomial(1, 1);
    const Poly one = Poly::constant(1);

    // (i) common linear factor or all constants
    {
        std::vector<const Poly*> nz;
        for (const Poly* h : {&A1, &A2, &B1, &B2})
            if (!h->is_zero())
                nz.push_back(h);
        bool ok = !nz.empty();
        for (const Poly* h : nz)
            ok = ok && deg_or_neg(*h) <= 1 && deg_or_neg(*h) == deg_or_neg(*nz.front()) && proportional(*h, *nz.front());
        if (ok) {
            const Poly& zeta = *nz.front();
            auto scalar = [&](const Poly& h) { return h.is_zero() ? Rational(0) : h.leading() / zeta.leading(); };
            const int L = !A1.is_zero() ? 1 : 2;
            const Rational aL = scalar(L == 1 ? A1 : A2);
            const Rational bL = scalar(L == 1 ? B1 : B2);
            return MuPair{{v * aL, one * aL}, {v * (-bL), one * (-bL)}, "C-lemma6-i", L};
        }
    }
    // (ii) columns proportional, with the vanishing beta-remainder special case
    if (B1.is_zero() && B2.is_zero())
        return MuPair{{one, v}, {Poly{}, Poly{}}, "C-lemma6-ii-special", 0};
    {
        const Poly& Bk = !B1.is_zero() ? B1 : B2;
        const Poly& Ak = !B1.is_zero() ? A1 : A2;
        const Rational ct = Ak.is_zero() ? Rational(0) : Ak.leading() / Bk.leading();
        if (A1 == B1 * ct && A2 == B2 * ct)
            return MuPair{{v * (-ct), one * (-ct)}, {v, one}, "C-lemma6-ii", 0};
    }
    // (iii) / (iv) rows proportional
    const int L = !(A1.is_zero() && B1.is_zero()) ? 1 : 2;
    const Poly& AL = L == 1 ? A1 : A2;
    const Poly& BL = L == 1 ? B1 : B2;
    const Poly& AO = L == 1 ? A2 : A1;
    const Poly& BO = L == 1 ? B2 : B1;
    const Rational ct = !AL.is_zero() ? (AO.is_zero() ? Rational(0) : AO.leading() / AL.leading())
                                      : (BO.is_zero() ? Rational(0) : BO.leading() / BL.leading());
    if (!(AO == AL * ct && BO == BL * ct))
        return std::nullopt;
    if (deg_or_neg(AL) == 1) {
        const auto b = in_powers_of(BL, AL);
        const auto c = in_powers_of(g.beta, AL);
        const Rational &b0 = b[0], &b1 = b[1], &c0 = c[0], &c1 = c[1], &c2 = c[2];
        return MuPair{{AL, one},
                      {AL * (-b1) - one * b0, AL * (b0 * c2 / c0) + one * ((b0 * c1 - b1 * c0) / c0)},
                      "C-lemma6-iii",
                      L};
    }
    if (deg_or_neg(AL) <= 0 && deg_or_neg(BL) == 1) {
        const auto a = in_powers_of(AL, BL);
        const auto c = in_powers_of(g.beta, BL);
        const Rational &a0 = a[0], &a1 = a[1], &c0 = c[0], &c1 = c[1], &c2 = c[2];
        return MuPair{{BL * (-a1) - one * a0, BL * (a0 * c2 / c0) + one * ((a0 * c1 - a1 * c0) / c0)},
                      {BL, one},
                      "C-lemma6-iv",
                      L};
    }
    return std::nullopt;
}

} // namespace

SpaceConfig space_config(const GluingData& g, unsigned d)
{
    require_degree(d);
    SpaceConfig c;
    c.d = d;
    const int di = static_cast<int>(d);
    c.d_omega = std::min(di - 1 + g.sigma1 - deg_or_neg(g.alpha1), di - 1 + g.sigma2 - deg_or_neg(g.alpha2));
    const int db = deg_or_neg(g.beta);
    c.d_tau = std::min({di - 1 - db, di - 1 + g.sigma1 - deg_or_neg(g.beta1), di - 1 + g.sigma2 - deg_or_neg(g.beta2)});
    // theta stays in degree d
    if (g.cls.kind != InterfaceCase::UniformLinear)
        c.d_tau = std::min(c.d_tau, di - 3);
    return c;
}

TraceNormalSpace case_a_space(const GluingData& g, unsigned d)
{
    if (g.cls.kind != InterfaceCase::UniformLinear)
        throw Error(ErrorCode::WrongCase, "uniform straight edge expected");
    TraceNormalSpace tns;
    tns.config = space_config(g, d);
    tns.interface_case = g.cls.kind;
    const int dw = tns.config.d_omega;

    const Poly cross_ab = g.alpha1 * g.beta2 - g.alpha2 * g.beta1;
    const int target = std::max(deg_or_neg(g.alpha1) + g.sigma2, deg_or_neg(g.alpha2) + g.sigma1) + 1;
    const bool branch1 = !cross_ab.is_zero() && deg_or_neg(cross_ab) == target;

    if (branch1) {
        tns.branch = "A1";
        tns.kappa = 0;
        for (unsigned i = 0; i < d; ++i)
            tns.params.push_back({indexed("theta", i), ParamBlock::Theta, bernstein_basis(d - 1, i), {}});
        for (int i = 0; i <= dw; ++i)
            tns.params.push_back({indexed("omega", static_cast<unsigned>(i)), ParamBlock::Omega, {},
                                  bernstein_basis(static_cast<unsigned>(dw), static_cast<unsigned>(i))});
        tns.omega_degree = dw;
    } else {
        tns.branch = "A2";
        tns.kappa = 1;
        const int L = omega_limiting_element(g);
        tns.L = L;
        const Poly& aL = g.alpha_of(L);
        const Rational tie =
            -Rational(d) * g.beta_of(L).coeff(g.sigma_of(L) + 1) / aL.coeff(deg_or_neg(aL));
        const unsigned n = static_cast<unsigned>(dw + 1);
        const Poly top = bernstein_basis(n, n);
        for (unsigned i = 0; i <= d; ++i) {
            Poly th = bernstein_basis(d, i);
            tns.params.push_back({indexed("theta", i), ParamBlock::Theta, th, top * (tie * th.coeff(d))});
        }
        for (unsigned i = 0; i < n; ++i) {
            Rational lead = Rational(binomial(n, i));
            if ((n - i) % 2)
                lead = -lead;
            tns.params.push_back(
                {indexed("omega", i), ParamBlock::Omega, {}, bernstein_basis(n, i) - top * lead});
        }
        tns.omega_degree = dw + 1;
    }
    count_blocks(tns);
    check_directions(g, tns);
    return tns;
}

TraceNormalSpace case_b_space(const GluingData& g, const InterfaceClass& cls, unsigned d)
{
    if (cls.kind != InterfaceCase::NonuniformLinear || !cls.rho)
        throw Error(ErrorCode::WrongCase, "non-uniform straight edge expected");
    TraceNormalSpace tns;
    tns.config = space_config(g, d);
    tns.interface_case = cls.kind;
    const Poly& rho = *cls.rho;

    std::array<Rational, 2> a, b;
    for (int ell = 1; ell <= 2; ++ell) {
        a[ell - 1] = quo_rem(g.alpha_of(ell), rho).remainder.coeff(0);
        QuoRem br = quo_rem(g.beta_of(ell), rho);
        if (!br.remainder.is_zero())
            throw Error(ErrorCode::InternalInconsistency, "rho does not divide beta_" + std::to_string(ell));
        b[ell - 1] = quo_rem(br.quotient, rho).remainder.coeff(0);
    }
    const int L = sgn(a[0]) != 0 ? 1 : 2;
    tns.L = L;

    push_trace_block(tns, g);
    tns.params.push_back({"mu1", ParamBlock::Theta, integrate_from_zero(rho), {}});
    if (a[1] * b[0] != a[0] * b[1]) {
        tns.branch = "B1";
        tns.kappa = 0;
    } else {
        tns.branch = "B2";
        tns.kappa = 1;
        tns.params.push_back({"mu2", ParamBlock::Theta, integrate_from_zero(Poly::constant(a[L - 1])),
                              rho * (-b[L - 1])});
    }
    push_normal_block(tns, g);
    tns.omega_degree = tns.config.d_omega + deg_or_neg(g.beta);
    count_blocks(tns);
    check_directions(g, tns);
    return tns;
}

TraceNormalSpace case_c_space(const GluingData& g, unsigned d)
{
    if (g.cls.kind != InterfaceCase::Parabolic)
        throw Error(ErrorCode::WrongCase, "parabolic edge expected");
    TraceNormalSpace tns;
    tns.config = space_config(g, d);
    tns.interface_case = g.cls.kind;
    tns.kappa = 1;

    push_trace_block(tns, g);
    push_normal_block(tns, g);

    const Rational c = lemma4_check(g);
    MuPair mu;
    if (sgn(c) != 0) {
        mu = MuPair{{g.hat_alpha1, g.hat_alpha2}, {-g.hat_beta1, -g.hat_beta2}, "C-lemma5", 0};
    } else {
        auto found = lemma6(g);
        if (!found)
            throw Error(ErrorCode::SubcaseExhausted, "no sub-case matches the remainder configuration");
        mu = *found;
    }
    for (int k = 0; k < 2; ++k) {
        Poly theta = integrate_from_zero(mu.tau[k]);
        if (!admissible(g, theta, mu.omega[k], d))
            throw Error(ErrorCode::SubcaseExhausted, "sub-case " + mu.branch + " produced an inadmissible direction");
        tns.params.push_back({indexed("mu", static_cast<unsigned>(k + 1)), ParamBlock::Mu, std::move(theta), mu.omega[k]});
    }
    tns.branch = mu.branch;
    tns.L = mu.L;
    tns.omega_degree = tns.config.d_omega + deg_or_neg(g.beta);
    count_blocks(tns);
    check_directions(g, tns);
    return tns;
}

TraceNormalSpace algorithm1(const GluingData& g, const InterfaceClass& cls, unsigned d)
{
    require_degree(d);
    switch (cls.kind) {
    case InterfaceCase::UniformLinear: return case_a_space(g, d);
    case InterfaceCase::NonuniformLinear: return case_b_space(g, cls, d);
    case InterfaceCase::Parabolic: return case_c_space(g, d);
    }
    throw Error(ErrorCode::WrongCase, "unknown interface case");
}

unsigned d0_formula(int sigma1, int sigma2, unsigned d)
{
    const long dd = d;
    const long s = sigma1 + sigma2;
    return static_cast<unsigned>(dd * (dd - 1) / 2 * (2 - s) + (dd - 1) * (dd + 1) * s);
}

SpaceDimensions dimension(const GluingData& g, const TraceNormalSpace& tns, unsigned d)
{
    SpaceDimensions out;
    out.D0 = d0_formula(g.sigma1, g.sigma2, d);
    out.interface_dofs = tns.interface_dofs();
    const long formula = 2L * d + min_sigma_minus_deg_alpha(g) + static_cast<long>(tns.kappa);
    if (formula != static_cast<long>(out.interface_dofs))
        throw Error(ErrorCode::FormulaMismatch, "ledger counts " + std::to_string(out.interface_dofs) +
                                                    " interface parameters, closed form gives " +
                                                    std::to_string(formula));
    out.total = out.D0 + out.interface_dofs;
    return out;
}

Poly eta(const GluingData& g, const Poly& theta, const Poly& omega, int ell, unsigned d)
{
    const Poly r = g.alpha_of(ell) * omega + g.beta_of(ell) * differentiate(theta);
    QuoRem qr = quo_rem(r, g.beta);
    if (!qr.remainder.is_zero())
        throw Error(ErrorCode::NotDivisible, "beta does not divide r_" + std::to_string(ell));
    if (deg_or_neg(qr.quotient) > static_cast<int>(d) - 1 + g.sigma_of(ell))
        throw Error(ErrorCode::DegreeExceeded, "eta_" + std::to_string(ell) + " exceeds degree " +
                                                   std::to_string(static_cast<int>(d) - 1 + g.sigma_of(ell)));
    return qr.quotient;
}

bool admissible(const GluingData& g, const Poly& theta, const Poly& omega, unsigned d)
{
    if (deg_or_neg(theta) > static_cast<int>(d) || deg_or_neg(omega) > static_cast<int>(d) + 2)
        return false;
    for (int ell = 1; ell <= 2; ++ell) {
        try {
            eta(g, theta, omega, ell, d);
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

} // namespace mixc1
