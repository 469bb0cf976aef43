#pragma once

#include "mixc1/gluing.hpp"

#include <string>
#include <vector>

namespace mixc1 {

enum class ParamBlock { Theta, Omega, Mu };

const char* to_string(ParamBlock b);

/// One free parameter of the trace / normal-derivative space and its (theta, omega) direction.
struct FreeParam {
    std::string name;
    ParamBlock block;
    Poly theta;
    Poly omega;
};

struct SpaceConfig {
    unsigned d = 0;
    int delta = 2;
    int d_tau = 0;
    int d_omega = 0;
};

SpaceConfig space_config(const GluingData& g, unsigned d);

struct TraceNormalSpace {
    SpaceConfig config;
    InterfaceCase interface_case = InterfaceCase::Parabolic;
    std::vector<FreeParam> params;
    unsigned n_theta = 0;
    unsigned n_omega = 0;
    unsigned n_mu = 0;
    unsigned kappa = 0;
    /// e.g. "A1", "A2", "B1", "B2", "C-lemma5", "C-lemma6-i".
    std::string branch;
    /// Degree of the polynomial space spanned by the omega-block directions.
    int omega_degree = 0;
    /// Element index L used by the construction (1 or 2); 0 when unused.
    int L = 0;

    unsigned interface_dofs() const { return n_theta + n_omega + n_mu; }
};

TraceNormalSpace case_a_space(const GluingData& g, unsigned d);
TraceNormalSpace case_b_space(const GluingData& g, const InterfaceClass& cls, unsigned d);
TraceNormalSpace case_c_space(const GluingData& g, unsigned d);
TraceNormalSpace algorithm1(const GluingData& g, const InterfaceClass& cls, unsigned d);

struct SpaceDimensions {
    unsigned D0 = 0;
    unsigned interface_dofs = 0;
    unsigned total = 0;
};

/// C(d,2)(2 - s1 - s2) + (d-1)(d+1)(s1 + s2)
unsigned d0_formula(int sigma1, int sigma2, unsigned d);

/// Throws FormulaMismatch when the parameter ledger disagrees with the closed-form count.
SpaceDimensions dimension(const GluingData& g, const TraceNormalSpace& tns, unsigned d);

/// eta_ell = (alpha_ell omega + beta_ell theta') / beta. Throws NotDivisible / DegreeExceeded.
Poly eta(const GluingData& g, const Poly& theta, const Poly& omega, int ell, unsigned d);

/// True when (theta, omega) satisfies both divisibility and degree conditions for both elements.
bool admissible(const GluingData& g, const Poly& theta, const Poly& omega, unsigned d);

} // namespace mixc1
