#pragma once

#include "mixc1/c1space.hpp"
#include "mixc1/linalg.hpp"

#include <array>
#include <map>
#include <tuple>
#include <string>
#include <vector>

namespace mixc1 {

enum class FunctionalScaling { Paper, Unit };

const char* to_string(FunctionalScaling s);
FunctionalScaling parse_functional_scaling(std::string_view text);

/// scale * (d/dv)^order of theta or omega at t.
struct Functional {
    ParamBlock target = ParamBlock::Theta;
    Rational t;
    unsigned order = 0;
    Rational scale = 1;

    std::string label() const;
};

struct FunctionalSet {
    unsigned K = 0;
    std::vector<Functional> trace;
    std::vector<Functional> normal;
    /// True when point evaluations replaced the endpoint/interior layout (too few trace parameters).
    bool fallback = false;

    /// trace functionals followed by normal functionals
    std::vector<Functional> all() const;
};

Rational apply(const Functional& f, const Poly& theta, const Poly& omega);

/// Endpoint derivatives up to K plus uniform interior nodes. Throws TooFewDofs when n_theta < 2.
FunctionalSet build_functionals(const TraceNormalSpace& tns, FunctionalScaling scaling = FunctionalScaling::Paper);

/// Point evaluations used when build_functionals cannot apply: theta at 0, omega at j / (n_omega + 1).
FunctionalSet build_point_functionals(const TraceNormalSpace& tns, FunctionalScaling scaling = FunctionalScaling::Paper);

/// Per-element Bézier nets of degree d.
struct IsoFunction {
    std::string tag;
    unsigned d = 0;
    DomainKind kind1 = DomainKind::Triangle;
    DomainKind kind2 = DomainKind::Square;
    BezierNet net1;
    BezierNet net2;

    const BezierNet& net(int ell) const { return ell == 1 ? net1 : net2; }
    DomainKind kind(int ell) const { return ell == 1 ? kind1 : kind2; }
    BiPoly bipoly(int ell) const { return net_to_bipoly(net(ell), kind(ell), d); }
};

/// a + s b (same layout required)
IsoFunction axpy(const IsoFunction& a, const Rational& s, const IsoFunction& b);

using InteriorCoefficients = std::map<std::tuple<int, unsigned, unsigned>, Rational>;

/// Row 0 from theta, row 1 from eta_ell, rows >= 2 from the interior map keyed by (ell, i, j).
IsoFunction assemble_net(const GluingData& g, const Poly& theta, const Poly& eta1, const Poly& eta2,
                         const InteriorCoefficients& interior, unsigned d);

/// Builds the function with trace theta and scaled normal derivative omega (interior zero).
IsoFunction iso_from_trace(const GluingData& g, const Poly& theta, const Poly& omega, unsigned d);

/// Unit-coefficient functions for rows i >= 2: element 1 first, then element 2, lexicographic (i, j).
std::vector<IsoFunction> interior_block(unsigned d, ElementKind kind1, ElementKind kind2);

/// Exact L2 product over the physical domain.
class InnerProduct {
public:
    explicit InnerProduct(const MeshPair& m);
    Rational operator()(const IsoFunction& f, const IsoFunction& h) const;

private:
    std::array<BiPoly, 2> weight_;
};

Rational inner_product(const IsoFunction& f, const IsoFunction& h, const MeshPair& m);

struct BasisOptions {
    FunctionalScaling scaling = FunctionalScaling::Paper;
    bool mu_orthogonalize = true;
};

struct BasisSet {
    FunctionalSet functionals;
    /// Rows: functionals; columns: theta- and omega-block parameters in ledger order.
    Matrix collocation;
    std::vector<IsoFunction> interface_functions;
    std::vector<IsoFunction> interior_functions;
    /// (theta, omega) of each interface function.
    std::vector<std::pair<Poly, Poly>> interface_traces;

    std::size_t size() const { return interface_functions.size() + interior_functions.size(); }
};

/// Collocation matrix of the functionals over the non-mu parameter directions.
Matrix collocation_matrix(const TraceNormalSpace& tns, const FunctionalSet& fs);

/// Interface block: one function per functional plus the mu functions. Throws SingularCollocation.
BasisSet collocate(const MeshPair& m, const GluingData& g, const TraceNormalSpace& tns, const FunctionalSet& fs,
                   const BasisOptions& options = {});

/// Interface block (falling back to point functionals when needed) plus the interior block.
BasisSet generate_basis(const MeshPair& m, const GluingData& g, const TraceNormalSpace& tns,
                        const BasisOptions& options = {});

} // namespace mixc1
