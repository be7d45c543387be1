#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace jetlct {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& z) { return z.str(); }

/// Renders "p" for integers and "p/q" otherwise; never a float.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational(long num, long den = 1) { return Rational(num, den); }

}  // namespace jetlct
