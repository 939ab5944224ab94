#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "decav/base.hpp"
#include "decav/digit_stream.hpp"
#include "decav/rational.hpp"

namespace decav {

// Eventually periodic base-b expansion of a rational's fractional part, in
// canonical non-terminating form: the period is minimal, nonempty, and never
// the single digit 0 (terminating expansions are rewritten onto a repeating
// b-1 tail).
struct RationalExpansion {
    Base base;
    std::vector<digit_t> preperiod;
    std::vector<digit_t> period;
};

inline constexpr std::uint64_t default_denominator_limit = 10'000'000;

// Long division over the fractional part with a remainder-indexed position
// table: first repeated remainder closes the minimal period. Memory is O(q),
// so reduced denominators above q_limit are refused (error suggests the
// stream form, which needs no table). Zero and integer inputs are rejected:
// zero has no non-terminating expansion.
RationalExpansion expand(const Rational& r, Base base,
                         std::uint64_t q_limit = default_denominator_limit);

// True iff every prime factor of the reduced denominator divides the base —
// exactly the rationals whose expansion terminates, i.e. whose canonical
// period is the single digit b-1.
bool is_regular(const Rational& r, Base base);

// Asymptotic digit average of r in base b: the mean of the period digits,
// exact. Equals b-1 whenever is_regular(r, base).
Rational exact_average(const Rational& r, Base base,
                       std::uint64_t q_limit = default_denominator_limit);

// The unique rational in [0, 1) whose canonical expansion is e:
//   (N_pre * (b^m - 1) + N_per) / (b^k * (b^m - 1))
// where N_pre, N_per are the digit blocks read as base-b integers.
Rational reconstruct(const RationalExpansion& e);

// "0.<preperiod>(<period>)_b" with digits rendered 0-9a-z, e.g. "0.1(6)_10".
std::string expansion_text(const RationalExpansion& e);

// Streaming long division over the fractional part. Works for any
// denominator (no cycle table) and applies the canonical rewrite on the fly
// when the division terminates. Rejects zero and integer inputs.
std::unique_ptr<DigitStream> rational_stream(const Rational& r, Base base);

} // namespace decav
