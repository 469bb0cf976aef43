#pragma once

#include "mixc1/verify.hpp"

#include <string>

namespace mixc1 {

struct Analysis {
    MeshPair mesh;
    GluingData gluing;
    TraceNormalSpace space;
    SpaceDimensions dims;
};

/// Gluing data, Algorithm 1 ledger and dimension count for degree d.
Analysis analyze(const MeshPair& m, unsigned d);

struct ReportOptions {
    /// Adds decimal companions next to rational strings.
    bool with_float = false;
};

std::string analysis_to_json(const Analysis& a, const ReportOptions& options = {});
std::string basis_to_json(const Analysis& a, const BasisSet& b, const ReportOptions& options = {});

struct VerifyOptions {
    bool oracle = false;
    bool identity = true;
    unsigned gradient_samples = 0;
    bool cond = false;
    double gradient_tolerance = 1e-10;
    BasisOptions basis;
};

struct VerifyOutcome {
    bool pass = true;
    std::string json;
};

VerifyOutcome run_verification(const Analysis& a, const VerifyOptions& options, const ReportOptions& report = {});

} // namespace mixc1
