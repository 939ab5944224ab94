#pragma once

#include <span>
#include <vector>

#include "decav/base.hpp"

namespace decav {

// A terminating expansion rewritten into the mandatory non-terminating form:
//   0.d1 d2 ... dk   ->   0.d1 d2 ... (dk - 1) followed by b-1 repeating
// (with trailing zeros of the input absorbed first, so the decremented digit
// is the last nonzero one). The period is always the single digit b-1.
struct CanonicalForm {
    std::vector<digit_t> prefix;
    std::vector<digit_t> period;
};

// Rejects digits outside the base (std::invalid_argument) and empty or
// all-zero input (std::domain_error: zero has no non-terminating expansion).
CanonicalForm canonicalize(std::span<const digit_t> digits, Base base);

} // namespace decav
