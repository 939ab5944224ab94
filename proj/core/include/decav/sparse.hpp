#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "decav/base.hpp"
#include "decav/digit_stream.hpp"
#include "decav/rational.hpp"

namespace decav {

// Base-10 numbers of the form  sum_n  b_n * 10^(-a_n)  with strictly
// increasing integer positions a_n >= 1 and digit coefficients 1 <= b_n <= 9:
// a single nonzero digit at each sparse position, zeros everywhere else.
//
// Positions come from a closed-form family, optionally preceded by a short
// explicit list; coefficients cycle through a fixed pattern.
struct SparseSeriesSpec {
    struct Factorial {
        friend bool operator==(Factorial, Factorial) noexcept { return true; }
    }; // a_n = n!
    struct Exponential {
        std::uint32_t base = 2; // a_n = base^n, base >= 2
        friend bool operator==(Exponential a, Exponential b) noexcept { return a.base == b.base; }
    };
    struct Polynomial {
        std::uint64_t scale = 1; // a_n = scale * n^degree, scale >= 1
        std::uint32_t degree = 1; // degree >= 1
        friend bool operator==(Polynomial a, Polynomial b) noexcept {
            return a.scale == b.scale && a.degree == b.degree;
        }
    };
    using Family = std::variant<Factorial, Exponential, Polynomial>;

    Family family{Factorial{}};
    std::vector<std::uint64_t> explicit_positions; // optional leading a_1..a_L
    std::vector<digit_t> coefficients{1};          // cyclic b_n values

    // a_n: the n-th support position (1-based). Explicit positions first,
    // then the family evaluated at the global index n.
    Integer position(std::uint64_t n) const;

    digit_t coefficient(std::uint64_t n) const;

    friend bool operator==(const SparseSeriesSpec&, const SparseSeriesSpec&) = default;
};

// Throws std::invalid_argument naming the violated constraint: family
// parameters out of range, coefficients outside [1,9], explicit positions
// not strictly increasing or < 1, or the family not continuing strictly
// above the explicit prefix.
void validate(const SparseSeriesSpec& spec);

// lim n/a_n, exact: 0 for factorial, exponential, and polynomials of degree
// >= 2; 1/scale for degree-1 polynomials. This is the quantity whose
// vanishing makes the number's digit average 0.
Rational support_density_limit(const SparseSeriesSpec& spec);

// Stream of the expansion's digits. start_position > 1 begins mid-sequence
// (digit at that 1-based position first), which chunk-parallel runs use.
std::unique_ptr<DigitStream> sparse_series(const SparseSeriesSpec& spec,
                                           std::uint64_t start_position = 1);

// Family grammar: "factorial" | "exp(K)" | "poly(C,J)", optionally prefixed
// with explicit positions as "list(P1,P2,...)+family". Coefficients are not
// part of this grammar (they ride a separate --coeffs flag in the CLI).
SparseSeriesSpec parse_sparse_family(const std::string& text);

// Inverse of parse_sparse_family for the family/list part; used by the
// config echo.
std::string sparse_family_text(const SparseSeriesSpec& spec);

} // namespace decav
