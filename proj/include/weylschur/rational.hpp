#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylschur {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "num/den", omitting "/1" for integers.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

inline Rational rational_from_string(std::string_view sv) {
    const auto slash = sv.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Integer(std::string(sv)));
        Integer num{std::string(sv.substr(0, slash))};
        Integer den{std::string(sv.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal: " + std::string(sv));
    }
}

/// x^e for integer e of either sign; x must be nonzero when e < 0.
inline Rational pow_rational(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("pow_rational: 0 to negative power");
        return pow_rational(Rational(1) / x, -e);
    }
    Rational acc = 1, base = x;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace weylschur
