#include "mixc1/rational.hpp"

#include "mixc1/errors.hpp"

#include <cctype>
#include <string>

namespace mixc1 {

const char* error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::EdgeMismatch: return "EdgeMismatch";
    case ErrorCode::IrregularOnInterface: return "IrregularOnInterface";
    case ErrorCode::IrregularGluing: return "IrregularGluing";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::SubcaseExhausted: return "SubcaseExhausted";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DegreeExceeded: return "DegreeExceeded";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::TooFewDofs: return "TooFewDofs";
    case ErrorCode::SingularCollocation: return "SingularCollocation";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::MixedOrientation: return "MixedOrientation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw Error(ErrorCode::Parse, "not an integer: '" + std::string(s) + "'");
    Integer z(std::string(s), 10);
    return neg ? Integer(-z) : z;
}

Integer pow10(unsigned e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view s)
{
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exponent = parse_integer(s.substr(e + 1)).get_si();
        s = s.substr(0, e);
    }
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto ip = s.substr(0, dot);
        auto fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw Error(ErrorCode::Parse, "malformed decimal '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(s))
            throw Error(ErrorCode::Parse, "malformed number '" + std::string(s) + "'");
        digits = std::string(s);
    }
    Rational r(Integer(digits, 10));
    long shift = exponent - frac_len;
    if (shift > 0)
        r *= Rational(pow10(static_cast<unsigned>(shift)));
    else if (shift < 0)
        r /= Rational(pow10(static_cast<unsigned>(-shift)));
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw Error(ErrorCode::Parse, "empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return parse_decimal(text);
}

std::string to_fraction_string(const Rational& value)
{
    return value.get_str(10);
}

std::string to_string(const Rational& value)
{
    Integer den = value.get_den();
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1)
        return to_fraction_string(value);
    unsigned places = std::max(twos, fives);
    if (places == 0)
        return value.get_num().get_str(10);
    Integer scaled = value.get_num() * pow10(places) / value.get_den();
    bool neg = scaled < 0;
    std::string digits = Integer(abs(scaled)).get_str(10);
    if (digits.size() <= places)
        digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return neg ? "-" + digits : digits;
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer falling_factorial(long n, unsigned k)
{
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i)
        r *= (n - static_cast<long>(i));
    return r;
}

} // namespace mixc1
