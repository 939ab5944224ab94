#include "decav/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "decav/primes.hpp"

namespace decav {

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::rational_with_exact_av:
        return "rational-with-exact-average";
    case Verdict::irrational_by_criterion:
        return "irrational-by-criterion";
    case Verdict::evidence_av_zero:
        return "evidence-consistent-with-average-zero";
    case Verdict::evidence_positive_av:
        return "evidence-of-positive-average";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

ClassificationReport classify_rational(const Rational& r, Base base, std::uint64_t q_limit) {
    ClassificationReport out;
    out.subject = "rational(" + rational_to_string(r) + ", base=" + std::to_string(base.value()) + ")";
    out.verdict = Verdict::rational_with_exact_av;
    out.exact_average = exact_average(r, base, q_limit);
    out.justification = "eventually periodic expansion; the average is the exact mean of the "
                        "period digits (positive in canonical form)";
    return out;
}

ClassificationReport classify_sparse(const SparseSeriesSpec& spec) {
    ClassificationReport out;
    out.subject = "sparse(" + sparse_family_text(spec) + ")";
    Rational limit = support_density_limit(spec);
    out.analytic_limit = limit;
    if (limit == 0) {
        out.verdict = Verdict::irrational_by_criterion;
        out.justification = "support density n/a_n tends to 0, so the digit average is at most "
                            "9 * 0 = 0; a number with digit average 0 and infinitely many nonzero "
                            "digits is irrational. Holds for every coefficient pattern.";
    } else {
        out.verdict = Verdict::inconclusive;
        out.justification = "support density n/a_n tends to " + rational_to_string(limit) +
                            " > 0; the zero-average criterion does not apply";
    }
    return out;
}

ClassificationReport classify_prime_indicator(std::uint64_t prefix_n) {
    if (prefix_n < 2)
        throw std::invalid_argument("prime-indicator evidence needs a prefix of at least 2 digits");

    ClassificationReport out;
    out.subject = "prime-indicator";
    out.verdict = Verdict::irrational_by_criterion;
    out.analytic_limit = Rational(0);
    out.justification = "the prefix average equals pi(n)/n, and pi(n)/n -> 0 (Chebyshev), so the "
                        "digit average is 0 while infinitely many digits are 1";
    out.prefix_n = prefix_n;

    // Corroborating empirical checkpoints, computed by direct prime counting
    // (independent of the digit-stream generator).
    std::vector<std::uint64_t> points = CheckpointSchedule::pow10().materialize(prefix_n);
    PrimeSieve sieve;
    std::uint64_t count = 0;
    std::uint64_t prev_mark = 0;
    for (std::uint64_t point : points) {
        sieve.for_primes(prev_mark + 1, point, [&](std::uint64_t) { ++count; });
        Checkpoint cp;
        cp.n = point;
        cp.digit_sum = count;
        cp.counts[1] = count;
        cp.counts[0] = point - count;
        out.evidence.push_back(cp);
        prev_mark = point;
    }
    return out;
}

ClassificationReport classify_stream(DigitStream& stream, std::uint64_t prefix_n,
                                     const Rational& zero_threshold) {
    if (prefix_n == 0)
        throw std::invalid_argument("stream classification needs a nonempty prefix");
    if (zero_threshold <= 0 || zero_threshold >= 1)
        throw std::invalid_argument("zero threshold must lie strictly between 0 and 1");

    StreamStats stats(stream.base());
    consume(stats, stream, prefix_n, CheckpointSchedule::pow10());
    const auto& cps = stats.running.checkpoints;

    ClassificationReport out;
    out.subject = stream.label();
    out.zero_threshold = zero_threshold;
    out.prefix_n = prefix_n;
    out.evidence = cps;

    const Checkpoint& last = cps.back();
    Rational final_avg = last.average();
    const int b = stream.base().value();

    // Zero evidence: final average under the threshold and the tail of
    // checkpoint averages (last three, or all if fewer) non-increasing.
    bool tail_non_increasing = true;
    std::size_t window = std::min<std::size_t>(3, cps.size());
    for (std::size_t i = cps.size() - window; i + 1 < cps.size(); ++i)
        if (cps[i].average() < cps[i + 1].average())
            tail_non_increasing = false;

    // Positive evidence: final average clear of zero by (b-1) * threshold
    // and per-digit frequencies settled between the last two checkpoints
    // (drift below 1/b per digit; vacuous with a single checkpoint).
    bool frequencies_settled = true;
    if (cps.size() >= 2) {
        const Checkpoint& prev = cps[cps.size() - 2];
        Rational bound(1, b);
        for (int d = 0; d < b; ++d) {
            Rational drift =
                abs(last.frequency(static_cast<unsigned>(d)) - prev.frequency(static_cast<unsigned>(d)));
            if (drift >= bound) {
                frequencies_settled = false;
                break;
            }
        }
    }

    if (final_avg < zero_threshold && tail_non_increasing) {
        out.verdict = Verdict::evidence_av_zero;
        out.justification =
            "finite-prefix evidence only: prefix average " + rational_to_string(final_avg) +
            " is below the threshold and checkpoint averages are non-increasing; consistent with "
            "digit average 0 but not a proof";
    } else if (final_avg > Rational(b - 1) * zero_threshold && frequencies_settled) {
        out.verdict = Verdict::evidence_positive_av;
        out.justification =
            "finite-prefix evidence only: prefix average " + rational_to_string(final_avg) +
            " is well clear of zero with settled digit frequencies; suggests a positive digit "
            "average but proves nothing";
    } else {
        out.verdict = Verdict::inconclusive;
        out.justification = "finite-prefix evidence matches neither the zero-average nor the "
                            "positive-average pattern";
    }
    return out;
}

} // namespace decav
