#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "mfid/exact/integer.hpp"

namespace mfid {

// GMP rationals are canonical after every operation: gcd(|num|, den) = 1, den > 0.
using Rational = boost::multiprecision::mpq_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(n, d);
}

inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational rpow(Rational base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        base = 1 / base;
        exp = -exp;
    }
    Rational r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// Serialized form "p/q" (always with an explicit denominator).
inline std::string to_string(const Rational& q) { return num(q).str() + "/" + den(q).str(); }

/// Parses "p/q" or "p".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: \"" + s + "\"");
    }
}

}  // namespace mfid
