// Exact rational arithmetic used throughout the library.
// All comparisons that decide algorithm behaviour (flip conditions, level-set
// thresholds, oracle densities) are done on these types -- never on floats.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace orient {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

// floor(x) for x >= 0 or any x (round toward negative infinity).
inline BigInt floor_rational(const Rational& x) {
    BigInt q = x.numerator() / x.denominator();
    if (x.numerator() < 0 && q * x.denominator() != x.numerator()) --q;
    return q;
}

inline BigInt ceil_rational(const Rational& x) {
    BigInt q = x.numerator() / x.denominator();
    if (x.numerator() > 0 && q * x.denominator() != x.numerator()) ++q;
    return q;
}

// x^e with integer e (e may be negative; x must be nonzero then).
inline Rational rational_pow(const Rational& x, long long e) {
    if (e < 0) return rational_pow(Rational(x.denominator(), x.numerator()), -e);
    Rational acc(1);
    Rational base = x;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1ull) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline long long to_long(const BigInt& x) { return static_cast<long long>(x); }

inline std::string to_string(const Rational& x) {
    return x.numerator().str() + "/" + x.denominator().str();
}

inline double to_double(const Rational& x) {
    return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

}  // namespace orient
