#pragma once

#include "doctest.h"
#include "generators.hpp"

#include "mixc1/basisgen.hpp"
#include "mixc1/errors.hpp"
#include "mixc1/examples.hpp"
#include "mixc1/geometry.hpp"
#include "mixc1/gluing.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mixc1::testing {

/// Error code raised by f, or nullopt when it returns normally.
template <class F>
std::optional<ErrorCode> code_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

/// Polynomial from "p/q" strings, lowest degree first.
inline Poly P(std::initializer_list<const char*> coeffs)
{
    std::vector<Rational> c;
    for (const char* s : coeffs)
        c.push_back(parse_rational(s));
    return Poly(std::move(c));
}

} // namespace mixc1::testing

template <>
struct doctest::StringMaker<mixc1::Poly> {
    static doctest::String convert(const mixc1::Poly& p)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            s += (i ? ", " : "") + mixc1::to_fraction_string(p.coeffs()[i]);
        return (s + "]").c_str();
    }
};
