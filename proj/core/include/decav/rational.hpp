#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace decav {

// All exact arithmetic is delegated to GMP. Averages, digit frequencies and
// deviations throughout the library are mpq values — no floating point.
using Rational = mpq_class;
using Integer = mpz_class;

using u128 = unsigned __int128;

Integer integer_from_u128(u128 v);
std::string u128_to_string(u128 v);

// Normalized p/q with q >= 1. Rejects q == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p" and "p/q" with optional leading '-'; rejects everything else,
// including q == 0.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1 (e.g. "9", "9/2").
std::string rational_to_string(const Rational& value);

// Plain decimal with exactly `sig` significant digits, round half to even.
// Used everywhere a human-readable column accompanies an exact rational.
std::string decimal_string(const Rational& value, unsigned sig = 12);

} // namespace decav
