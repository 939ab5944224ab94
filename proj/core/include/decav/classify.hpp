#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decav/base.hpp"
#include "decav/expansion.hpp"
#include "decav/rational.hpp"
#include "decav/sparse.hpp"
#include "decav/stats.hpp"

namespace decav {

// The first two verdicts are proofs; the middle two grade finite-prefix
// evidence and claim nothing; the last is an honest shrug.
enum class Verdict {
    rational_with_exact_av,  // eventually periodic; average is the period mean
    irrational_by_criterion, // an analytic argument forces the average to 0
    evidence_av_zero,        // finite prefix consistent with average 0
    evidence_positive_av,    // finite prefix far from 0 with settled frequencies
    inconclusive,
};

std::string_view verdict_name(Verdict v);

struct ClassificationReport {
    std::string subject;
    Verdict verdict = Verdict::inconclusive;
    std::optional<Rational> exact_average;  // rational subjects only
    std::optional<Rational> analytic_limit; // sparse / prime subjects: the limit forcing Av = 0
    std::optional<Rational> zero_threshold; // heuristic runs only
    std::string justification;
    std::uint64_t prefix_n = 0;      // digits inspected (0 for purely analytic verdicts)
    std::vector<Checkpoint> evidence; // checkpoint tallies backing the verdict
};

// Proof path: expand, take the exact period-digit mean (always > 0 in
// canonical form — a rational never has digit average 0).
ClassificationReport classify_rational(const Rational& r, Base base,
                                       std::uint64_t q_limit = default_denominator_limit);

// Proof path: verdict depends only on the position family, never on the
// coefficient pattern. Support density lim n/a_n = 0 caps the digit average
// at 9 * 0 = 0, hence irrational-by-criterion; a positive limit (degree-1
// polynomial positions) leaves the criterion silent -> inconclusive.
ClassificationReport classify_sparse(const SparseSeriesSpec& spec);

// Proof path: prime density pi(n)/n -> 0 (Chebyshev), so the indicator
// number's digit average is 0. Empirical pi(n)/n checkpoints up to prefix_n
// (>= 2) are attached as corroborating evidence.
ClassificationReport classify_prime_indicator(std::uint64_t prefix_n);

// Heuristic path for arbitrary streams: consumes prefix_n digits with
// power-of-ten checkpoints and grades the evidence against zero_threshold
// (which must lie strictly between 0 and 1). Never returns a proof verdict.
ClassificationReport classify_stream(DigitStream& stream, std::uint64_t prefix_n,
                                     const Rational& zero_threshold);

} // namespace decav
