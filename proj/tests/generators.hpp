#pragma once

#include "mixc1/errors.hpp"
#include "mixc1/examples.hpp"
#include "mixc1/geometry.hpp"
#include "mixc1/gluing.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mixc1::testing {

inline Rational R(std::string_view text) { return parse_rational(text); }
inline Rational R(long n, long d = 1) { return make_rational(n, d); }

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long lo, long hi, long den)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    return make_rational(dist(rng), den);
}

inline Poly random_poly(Rng& rng, int max_degree, long range = 9, long den = 4)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c)
        x = random_rational(rng, -range, range, den);
    if (c.back() == 0)
        c.back() = 1;
    return Poly(std::move(c));
}

enum class EdgeShape { Uniform, Nonuniform, Parabolic };

/// One element on side s (+1 right, -1 left) with u pointing away from the edge.
inline Element random_element(Rng& rng, ElementKind kind, int s, const std::array<Point, 3>& edge, long noise)
{
    auto jitter = [&] { return random_rational(rng, -noise, noise, 100); };
    std::vector<Point> pts(edge.begin(), edge.end());
    if (kind == ElementKind::Triangle) {
        pts.push_back({R(s, 2) + jitter(), R(0) + jitter()});
        pts.push_back({R(s, 2) + jitter(), R(1) + jitter()});
        pts.push_back({R(s) + jitter(), R(1, 2) + jitter()});
    } else {
        for (int i = 1; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j)
                pts.push_back({R(s * i, 2) + jitter(), R(j, 2) + jitter()});
    }
    return Element(kind, std::move(pts));
}

/// Random valid mesh pair with the requested edge shape; invalid draws are rejected and redrawn.
inline MeshPair random_mesh(Rng& rng, EdgeShape shape, std::optional<ElementKind> k1 = {},
                            std::optional<ElementKind> k2 = {}, long noise = 15)
{
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        Point mid{0, R(1, 2)};
        if (shape == EdgeShape::Nonuniform)
            mid.y = R(1, 2) + random_rational(rng, -20, 20, 100);
        if (shape == EdgeShape::Parabolic) {
            mid.x = random_rational(rng, -25, 25, 100);
            mid.y = R(1, 2) + random_rational(rng, -10, 10, 100);
        }
        if (shape == EdgeShape::Nonuniform && mid.y == R(1, 2))
            continue;
        if (shape == EdgeShape::Parabolic && mid.x == 0)
            continue;
        const std::array<Point, 3> edge{Point{0, 0}, mid, Point{0, 1}};
        auto pick = [&](std::optional<ElementKind> k) {
            return k ? *k : (coin(rng) ? ElementKind::Triangle : ElementKind::Quadrilateral);
        };
        const ElementKind kind1 = pick(k1), kind2 = pick(k2);
        try {
            MeshPair m = validate_mesh(random_element(rng, kind1, 1, edge, noise),
                                       random_element(rng, kind2, -1, edge, noise));
            compute_gluing(m);
            return m;
        } catch (const Error&) {
        }
    }
}

inline EdgeShape random_shape(Rng& rng)
{
    std::uniform_int_distribution<int> d(0, 2);
    return static_cast<EdgeShape>(d(rng));
}

inline const std::vector<std::string>& corpus()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : bundled_examples())
            out.push_back(e.name);
        return out;
    }();
    return names;
}

} // namespace mixc1::testing
