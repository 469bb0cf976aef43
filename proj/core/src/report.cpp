#include "mixc1/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace mixc1 {

using json = nlohmann::ordered_json;

Analysis analyze(const MeshPair& m, unsigned d)
{
    GluingData g = compute_gluing(m);
    TraceNormalSpace tns = algorithm1(g, g.cls, d);
    SpaceDimensions dims = dimension(g, tns, d);
    return Analysis{m, std::move(g), std::move(tns), dims};
}

namespace {

json poly_json(const Poly& p, const ReportOptions& o)
{
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(to_string(c));
    if (!o.with_float)
        return coeffs;
    json out;
    out["coeffs"] = std::move(coeffs);
    json f = json::array();
    for (const auto& c : p.coeffs())
        f.push_back(c.get_d());
    out["float"] = std::move(f);
    return out;
}

/// out[k] = fn(items[k]), evaluated in contiguous chunks on worker threads.
template <class T, class Fn>
auto parallel_map(const std::vector<const T*>& items, Fn fn)
{
    using R = decltype(fn(*items.front()));
    std::vector<R> out(items.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunk = (items.size() + workers - 1) / workers;
    std::vector<std::future<void>> jobs;
    for (std::size_t lo = 0; lo < items.size(); lo += chunk)
        jobs.push_back(std::async(std::launch::async, [&, lo] {
            for (std::size_t k = lo; k < std::min(items.size(), lo + chunk); ++k)
                out[k] = fn(*items[k]);
        }));
    for (auto& j : jobs)
        j.get();
    return out;
}

json rational_json(const Rational& r, const ReportOptions& o)
{
    if (!o.with_float)
        return to_string(r);
    return json{{"value", to_string(r)}, {"float", r.get_d()}};
}

json net_json(const BezierNet& net, const ReportOptions& o)
{
    json rows = json::array();
    for (const auto& [ij, x] : net)
        rows.push_back(json{{"i", ij.first}, {"j", ij.second}, {"b", rational_json(x, o)}});
    return rows;
}

json gluing_json(const GluingData& g, const ReportOptions& o)
{
    json j;
    j["alpha_tilde1"] = poly_json(g.alpha_tilde1, o);
    j["alpha_tilde2"] = poly_json(g.alpha_tilde2, o);
    j["gamma"] = poly_json(g.gamma, o);
    j["gamma_normalized_at_zero"] = g.gamma_normalized_at_zero;
    j["alpha1"] = poly_json(g.alpha1, o);
    j["alpha2"] = poly_json(g.alpha2, o);
    j["alpha"] = poly_json(g.alpha, o);
    j["beta"] = poly_json(g.beta, o);
    j["beta1"] = poly_json(g.beta1, o);
    j["beta2"] = poly_json(g.beta2, o);
    j["hat_alpha1"] = poly_json(g.hat_alpha1, o);
    j["hat_alpha2"] = poly_json(g.hat_alpha2, o);
    j["hat_beta1"] = poly_json(g.hat_beta1, o);
    j["hat_beta2"] = poly_json(g.hat_beta2, o);
    j["star_alpha1"] = poly_json(g.star_alpha1, o);
    j["star_alpha2"] = poly_json(g.star_alpha2, o);
    j["star_beta1"] = poly_json(g.star_beta1, o);
    j["star_beta2"] = poly_json(g.star_beta2, o);
    j["sigma1"] = g.sigma1;
    j["sigma2"] = g.sigma2;
    return j;
}

json class_json(const InterfaceClass& c, const ReportOptions& o)
{
    json j;
    j["case"] = case_letter(c.kind);
    j["kind"] = to_string(c.kind);
    if (c.lambda)
        j["lambda"] = rational_json(*c.lambda, o);
    if (c.rho)
        j["rho"] = poly_json(*c.rho, o);
    if (c.n0)
        j["n0"] = json::array({rational_json(c.n0->x, o), rational_json(c.n0->y, o)});
    return j;
}

} // namespace

std::string analysis_to_json(const Analysis& a, const ReportOptions& o)
{
    json j;
    j["interface"] = class_json(a.gluing.cls, o);
    j["gluing"] = gluing_json(a.gluing, o);
    if (a.gluing.cls.kind == InterfaceCase::Parabolic)
        j["lemma4_constant"] = rational_json(lemma4_check(a.gluing), o);
    json cfg;
    cfg["d"] = a.space.config.d;
    cfg["delta"] = a.space.config.delta;
    cfg["d_tau"] = a.space.config.d_tau;
    cfg["d_omega"] = a.space.config.d_omega;
    cfg["omega_degree"] = a.space.omega_degree;
    j["config"] = cfg;
    json sp;
    sp["branch"] = a.space.branch;
    sp["L"] = a.space.L;
    sp["n_theta"] = a.space.n_theta;
    sp["n_omega"] = a.space.n_omega;
    sp["n_mu"] = a.space.n_mu;
    sp["kappa"] = a.space.kappa;
    json params = json::array();
    for (const auto& p : a.space.params)
        params.push_back(
            json{{"name", p.name}, {"block", to_string(p.block)}, {"theta", poly_json(p.theta, o)}, {"omega", poly_json(p.omega, o)}});
    sp["params"] = std::move(params);
    j["space"] = std::move(sp);
    j["dimensions"] = json{{"D0", a.dims.D0}, {"interface_dofs", a.dims.interface_dofs}, {"total", a.dims.total}};
    return j.dump(2);
}

std::string basis_to_json(const Analysis& a, const BasisSet& b, const ReportOptions& o)
{
    json j;
    j["d"] = a.space.config.d;
    j["branch"] = a.space.branch;
    json fs = json::array();
    for (const auto& f : b.functionals.all())
        fs.push_back(json{{"label", f.label()}, {"scale", to_string(f.scale)}});
    j["functionals"] = std::move(fs);
    j["K"] = b.functionals.K;
    j["fallback_functionals"] = b.functionals.fallback;
    j["condition_number"] = condition_number(b);
    json funcs = json::array();
    auto push = [&](const IsoFunction& f) {
        funcs.push_back(json{{"tag", f.tag}, {"net1", net_json(f.net1, o)}, {"net2", net_json(f.net2, o)}});
    };
    for (const auto& f : b.interface_functions)
        push(f);
    for (const auto& f : b.interior_functions)
        push(f);
    j["count"] = b.size();
    j["functions"] = std::move(funcs);
    return j.dump(2);
}

VerifyOutcome run_verification(const Analysis& a, const VerifyOptions& options, const ReportOptions& o)
{
    VerifyOutcome out;
    json j;
    j["d"] = a.space.config.d;
    j["branch"] = a.space.branch;
    j["formula_total"] = a.dims.total;

    const bool need_basis = options.identity || options.gradient_samples > 0 || options.cond;
    BasisSet basis;
    if (need_basis) {
        basis = generate_basis(a.mesh, a.gluing, a.space, options.basis);
        j["basis_size"] = basis.size();
        if (basis.size() != a.dims.total)
            out.pass = false;
    }
    if (options.oracle) {
        const OracleResult r = dimension_oracle(a.mesh, a.gluing, a.space.config.d);
        const bool ok = r.nullspace_dim == a.dims.total;
        j["oracle"] = json{{"rows", r.rows}, {"cols", r.cols}, {"rank", r.rank}, {"nullspace_dim", r.nullspace_dim}, {"pass", ok}};
        out.pass = out.pass && ok;
    }
    std::vector<const IsoFunction*> all;
    for (const auto& f : basis.interface_functions)
        all.push_back(&f);
    for (const auto& f : basis.interior_functions)
        all.push_back(&f);
    if (options.identity) {
        const auto reports = parallel_map(all, [&](const IsoFunction& f) { return c1_identity_check(f, a.gluing); });
        json fails = json::array();
        for (std::size_t k = 0; k < all.size(); ++k)
            if (!reports[k].pass)
                fails.push_back(json{{"tag", all[k]->tag},
                                     {"trace_residual", poly_json(reports[k].trace_residual, o)},
                                     {"identity_residual", poly_json(reports[k].identity_residual, o)}});
        j["identity"] = json{{"checked", all.size()}, {"failures", fails}, {"pass", fails.empty()}};
        out.pass = out.pass && fails.empty();
    }
    if (options.gradient_samples > 0) {
        const auto jumps = parallel_map(
            all, [&](const IsoFunction& f) { return gradient_jump(f, a.mesh, options.gradient_samples); });
        const double worst = jumps.empty() ? 0.0 : *std::max_element(jumps.begin(), jumps.end());
        const bool ok = worst <= options.gradient_tolerance;
        j["gradient_jump"] = json{{"samples", options.gradient_samples}, {"max", worst}, {"tolerance", options.gradient_tolerance}, {"pass", ok}};
        out.pass = out.pass && ok;
    }
    if (options.cond) {
        const double c = condition_number(basis);
        j["condition_number"] = std::isfinite(c) ? json(c) : json("inf");
    }
    j["pass"] = out.pass;
    out.json = j.dump(2);
    return out;
}

} // namespace mixc1
