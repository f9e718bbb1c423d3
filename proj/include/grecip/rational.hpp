#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grecip {

using BigInt = mpz_class;
// Always kept canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

// num/den in canonical form; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);
inline Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

// "7", "-4", "1/2". Integers never carry a "/1".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "a" or "a/b" with optional leading '-' on a; b must be positive.
// The result is canonicalized, so "2/4" parses to 1/2.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

BigInt factorial(unsigned n);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace grecip
