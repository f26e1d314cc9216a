#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fracdim {

// All set positions, counts and densities are exact. BigInt positions grow
// factorially with the block index, so nothing in the core may round.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

// floor(a/b), b > 0. cpp_int division truncates toward zero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && (a < 0)) --q;
    return q;
}

// ceil(a/b), b > 0.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && (a > 0)) ++q;
    return q;
}

inline BigInt floor_rat(const Rational& r) { return floor_div(numer(r), denom(r)); }
inline BigInt ceil_rat(const Rational& r) { return ceil_div(numer(r), denom(r)); }

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

inline Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Decimal rendering of an exact rational, 12 significant digits.
std::string decimal12(const Rational& r);

// Parses "p/q" or "p". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

BigInt parse_bigint(std::string_view text);

}  // namespace fracdim
