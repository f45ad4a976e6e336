#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "lcskit/error.hpp"

namespace lcskit {

// Arbitrary-precision exact rationals. cpp_rational keeps values reduced
// with a positive denominator, which is exactly the canonical form the
// engine needs.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

/// gcd on rationals: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d). Nonnegative result.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return b < 0 ? Rational(-b) : b;
    if (b == 0) return a < 0 ? Rational(-a) : a;
    Integer n = gcd(rat_num(a), rat_num(b));
    Integer d = lcm(rat_den(a), rat_den(b));
    if (n < 0) n = -n;
    return Rational(n, d);
}

inline std::string rat_to_string(const Rational& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

} // namespace lcskit
