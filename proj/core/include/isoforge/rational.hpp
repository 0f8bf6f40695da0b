#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace isoforge {

// All numeric values in the toolkit are exact rationals. Decimal literals
// are captured exactly at parse time, so every comparison downstream is
// decidable equality; there are no epsilon tolerances anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline Rational rat(long long n) { return Rational(BigInt(n)); }
inline Rational rat(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

bool is_integral(const Rational& r);

Rational rational_abs(const Rational& r);

// Largest integer <= r, as a rational.
Rational rational_floor(const Rational& r);

// Exact power with an integral exponent. Exponents with |e| > 1024 are
// rejected (returns nullopt), as are 0^negative. 0^0 == 1.
std::optional<Rational> rational_pow(const Rational& base, const BigInt& exponent);

// Floored modulus on integral rationals with modulus > 0; the result is in
// [0, m). Returns nullopt when either operand is non-integral or m <= 0.
std::optional<Rational> rational_mod(const Rational& value, const Rational& modulus);

// gcd on integral rationals; nullopt if either is non-integral.
std::optional<Rational> rational_gcd(const Rational& a, const Rational& b);

// Canonical text form: "n" for integers, "p/q" otherwise (q > 0, sign on p).
std::string to_string(const Rational& r);

// Accepts "n", "p/q" and "n.ddd" (all optionally signed). Exact.
std::optional<Rational> parse_rational(std::string_view text);

// Fixed-point rendering with exactly `scale` fractional digits, or nullopt
// when r * 10^scale is not an integer. scale == 0 renders plain integers.
std::optional<std::string> render_decimal(const Rational& r, int scale);

// Smallest scale at which r renders exactly as a finite decimal, or -1 if
// the expansion does not terminate.
int min_decimal_scale(const Rational& r);

}  // namespace isoforge
