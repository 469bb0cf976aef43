#pragma once

#include "mixc1/geometry.hpp"

#include <optional>

namespace mixc1 {

enum class InterfaceCase { UniformLinear, NonuniformLinear, Parabolic };

/// "A", "B" or "C".
const char* case_letter(InterfaceCase c);
const char* to_string(InterfaceCase c);

struct InterfaceClass {
    InterfaceCase kind = InterfaceCase::Parabolic;
    /// Nonuniform straight edge only: C1 = (1 - lambda) C0 + lambda C2, rho = 2 lambda + 2 (1 - 2 lambda) v.
    std::optional<Rational> lambda;
    std::optional<Poly> rho;
    std::optional<Point> n0;
};

/// Classification from the three edge control points; throws DegenerateEdge when C0 = C2.
InterfaceClass classify_edge(const std::array<Point, 3>& edge);
InterfaceClass classify_interface(const MeshPair& m);

struct GluingData {
    Poly alpha_tilde1, alpha_tilde2;
    Poly gamma;
    bool gamma_normalized_at_zero = true;
    Poly alpha1, alpha2;
    Poly alpha;
    Poly beta;
    Poly beta1, beta2;
    Poly hat_alpha1, hat_alpha2, hat_beta1, hat_beta2;
    Poly star_alpha1, star_alpha2, star_beta1, star_beta2;
    int sigma1 = 0, sigma2 = 0;
    InterfaceClass cls;

    const Poly& alpha_of(int ell) const { return ell == 1 ? alpha1 : alpha2; }
    const Poly& beta_of(int ell) const { return ell == 1 ? beta1 : beta2; }
    const Poly& alpha_tilde_of(int ell) const { return ell == 1 ? alpha_tilde1 : alpha_tilde2; }
    const Poly& hat_alpha_of(int ell) const { return ell == 1 ? hat_alpha1 : hat_alpha2; }
    const Poly& hat_beta_of(int ell) const { return ell == 1 ? hat_beta1 : hat_beta2; }
    int sigma_of(int ell) const { return ell == 1 ? sigma1 : sigma2; }
};

/// Throws IrregularGluing when alpha_ell or gamma vanishes on [0, 1].
GluingData compute_gluing(const MeshPair& m);

/// c with hat_alpha1 hat_beta2 - hat_alpha2 hat_beta1 = c beta (parabolic edges only).
Rational lemma4_check(const GluingData& g);

/// Degree of a polynomial with the zero polynomial mapped to -1 (for degree arithmetic only).
int deg_or_neg(const Poly& p);

} // namespace mixc1
