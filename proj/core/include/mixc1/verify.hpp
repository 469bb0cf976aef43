#pragma once

#include "mixc1/basisgen.hpp"

#include <string>
#include <vector>

namespace mixc1 {

struct C1Report {
    /// f1(0, v) - f2(0, v)
    Poly trace_residual;
    /// alpha~1 du f2 - alpha~2 du f1 + alpha dv f1 along u = 0
    Poly identity_residual;
    bool pass = false;
};

C1Report c1_identity_check(const IsoFunction& f, const GluingData& g);

struct OracleResult {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t nullspace_dim = 0;
};

/// Exact dimension of the C1 space by brute-force elimination over all Bézier coefficients.
OracleResult dimension_oracle(const MeshPair& m, const GluingData& g, unsigned d);

/// Largest Euclidean gap between the physical gradients from both sides at uniform interface samples.
double gradient_jump(const IsoFunction& f, const MeshPair& m, unsigned samples);

/// 2-norm condition number (largest over smallest singular value).
double condition_number(const Matrix& a);
double condition_number(const BasisSet& b);

struct SampleRow {
    int elem;
    double u, v, x, y, value;
};

/// (n + 1) x (n + 1) parameter grid per element; triangle samples restricted to u + v <= 1.
std::vector<SampleRow> sample_surface(const IsoFunction& f, const MeshPair& m, unsigned n);
std::string samples_to_csv(const std::vector<SampleRow>& rows);

} // namespace mixc1
