#pragma once

#include <cstdint>
#include <vector>

#include "decav/rational.hpp"

namespace decav {

// Pointwise certification of  a1 * n/ln(n) < pi(n) < a2 * n/ln(n)  over
// 2 <= n <= n_max. Rearranged to keep every side integer-exact except a
// single ln(n), which is evaluated in directed rounding (MPFR):
//   lower holds if  RNDU(a1_num * n) < RNDD(a1_den * pi(n) * RNDD(ln n))
//   upper holds if  RNDU(a2_den * pi(n) * RNDU(ln n)) < RNDD(a2_num * n)
// A point is reported as a violation when its certificate fails, so an empty
// violation list is a proof the strict inequalities hold on the whole range.
struct ChebyshevViolation {
    enum class Bound { lower, upper };

    std::uint64_t n = 0;
    std::uint64_t prime_count = 0; // pi(n)
    Bound bound = Bound::lower;

    friend bool operator==(const ChebyshevViolation&, const ChebyshevViolation&) = default;
};

struct ChebyshevCheck {
    Rational a1;
    Rational a2;
    std::uint64_t n_max = 0;
    std::vector<ChebyshevViolation> violations;
};

// Requires 0 < a1 < a2 and n_max >= 2.
ChebyshevCheck chebyshev_check(const Rational& a1, const Rational& a2, std::uint64_t n_max);

} // namespace decav
