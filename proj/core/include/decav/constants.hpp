#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "decav/base.hpp"
#include "decav/digit_stream.hpp"

namespace decav {

// Fractional base-10 digits of sqrt(m), e, or pi, computed with integer-only
// arithmetic (GMP) and released only once certified: each computation pins
// frac(x) * 10^(count + guard) inside an integer interval [lo, hi], and the
// leading `count` digits are emitted only when every value in the interval
// agrees on them. If the guard band is too small to decide (the interval
// straddles a digit boundary), the computation retries with the guard
// doubled — digits are never revised once handed out.
struct ConstantSpec {
    enum class Kind { sqrt, e, pi };

    Kind kind = Kind::sqrt;
    std::uint64_t sqrt_arg = 2; // sqrt only: >= 2 and not a perfect square
    unsigned guard_digits = 32; // >= 10

    std::string name() const; // "sqrt(2)", "e", "pi"

    friend bool operator==(const ConstantSpec&, const ConstantSpec&) = default;
};

// Throws std::invalid_argument for sqrt of a perfect square (rational, out of
// scope), sqrt_arg < 2, or guard_digits < 10.
void validate(const ConstantSpec& spec);

// Certified fractional digits 1..count.
std::vector<digit_t> constant_fraction_digits(const ConstantSpec& spec, std::size_t count);

// Stream over the same digits; grows its certified block geometrically so
// streaming n digits costs O(1) amortized recomputations.
std::unique_ptr<DigitStream> constant_digits(const ConstantSpec& spec);

// "sqrt(M)" (or "sqrtM"), "e", "pi".
ConstantSpec parse_constant_spec(const std::string& text);

} // namespace decav
