#include <doctest.h>

#include <numeric>

#include "decav/champernowne.hpp"
#include "decav/chebyshev.hpp"
#include "decav/classify.hpp"
#include "decav/sparse.hpp"

#include "oracles/oracles.hpp"

using namespace decav;

namespace {

SparseSeriesSpec family(const std::string& text) {
    return parse_sparse_family(text);
}

} // namespace

TEST_CASE("classify_rational returns the exact average") {
    auto r = classify_rational(make_rational(1, 7), Base::of(10));
    CHECK(r.verdict == Verdict::rational_with_exact_av);
    REQUIRE(r.exact_average.has_value());
    CHECK(*r.exact_average == mpq_class(9, 2));

    r = classify_rational(make_rational(1, 2), Base::of(10));
    CHECK(*r.exact_average == 9);

    r = classify_rational(make_rational(1, 3), Base::of(10));
    CHECK(*r.exact_average == 3);
}

TEST_CASE("rational averages are positive: rationals can never average zero") {
    for (std::uint64_t q = 2; q <= 100; ++q)
        for (std::uint64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            auto rep = classify_rational(
                make_rational(static_cast<long>(p), static_cast<long>(q)), Base::of(10));
            REQUIRE(*rep.exact_average > 0);
        }
}

TEST_CASE("classify_sparse built-in families") {
    auto r = classify_sparse(family("factorial"));
    CHECK(r.verdict == Verdict::irrational_by_criterion);
    REQUIRE(r.analytic_limit.has_value());
    CHECK(*r.analytic_limit == 0);

    r = classify_sparse(family("exp(2)"));
    CHECK(r.verdict == Verdict::irrational_by_criterion);
    CHECK(*r.analytic_limit == 0);

    r = classify_sparse(family("poly(3,1)"));
    CHECK(r.verdict == Verdict::inconclusive);
    CHECK(*r.analytic_limit == mpq_class(1, 3));

    r = classify_sparse(family("poly(5,2)"));
    CHECK(r.verdict == Verdict::irrational_by_criterion);
    CHECK(*r.analytic_limit == 0);
}

TEST_CASE("sparse verdicts are invariant under coefficient choice") {
    for (const char* fam : {"factorial", "exp(3)"}) {
        auto base_verdict = classify_sparse(family(fam)).verdict;
        for (std::vector<digit_t> coeffs :
             {std::vector<digit_t>{9}, {1, 2, 3}, {5, 5, 5, 5, 5, 5, 5, 9}}) {
            SparseSeriesSpec spec = family(fam);
            spec.coefficients = coeffs;
            REQUIRE(classify_sparse(spec).verdict == base_verdict);
        }
    }
}

TEST_CASE("classify_prime_indicator") {
    auto r = classify_prime_indicator(100);
    CHECK(r.verdict == Verdict::irrational_by_criterion);
    REQUIRE(!r.evidence.empty());
    CHECK(r.evidence.back().n == 100);
    CHECK(r.evidence.back().average() == mpq_class(1, 4));
    CHECK(r.justification.find("Chebyshev") != std::string::npos);

    CHECK_THROWS_AS(classify_prime_indicator(1), std::invalid_argument);
    CHECK_THROWS_AS(classify_prime_indicator(0), std::invalid_argument);
}

TEST_CASE("classify_prime_indicator evidence matches the sieve") {
    auto r = classify_prime_indicator(100000);
    auto flags = oracle::sieve(100000);
    for (const auto& cp : r.evidence) {
        REQUIRE(cp.average() ==
                make_rational(static_cast<unsigned long>(oracle::pi(cp.n, flags)),
                              static_cast<unsigned long>(cp.n)));
    }
}

TEST_CASE("classify_stream on the Liouville prefix") {
    SparseSeriesSpec spec = family("factorial");
    auto s = sparse_series(spec);
    auto r = classify_stream(*s, 10000, mpq_class(1, 100));
    CHECK(r.verdict == Verdict::evidence_av_zero);
    CHECK(r.prefix_n == 10000);
    // 7 supports in the first 10^4 positions
    CHECK(r.evidence.back().average() == mpq_class(7, 10000));
    CHECK(r.justification.find("not a proof") != std::string::npos);
}

TEST_CASE("classify_stream on champernowne reports positive evidence") {
    auto s = champernowne(Base::of(10));
    auto r = classify_stream(*s, 1000000, mpq_class(1, 100));
    CHECK(r.verdict == Verdict::evidence_positive_av);
    CHECK(r.evidence.back().average() == mpq_class(2088383, 500000));
}

TEST_CASE("classify_stream on a constant digit") {
    // digit file would do, but a tiny inline stream spec keeps it simple:
    // a rational with expansion 0.(5) is the constant-5 stream
    auto s = rational_stream(make_rational(5, 9), Base::of(10));
    auto r = classify_stream(*s, 10, mpq_class(1, 100));
    CHECK(r.verdict == Verdict::evidence_positive_av);
}

TEST_CASE("classify_stream middle ground is inconclusive") {
    // poly(20,1) puts a digit at every 20th position: the prefix average
    // hovers at 1/20, above the zero threshold but below the positive bar.
    SparseSeriesSpec spec = family("poly(20,1)");
    auto s = sparse_series(spec);
    auto r = classify_stream(*s, 10000, mpq_class(1, 100));
    CHECK(r.verdict == Verdict::inconclusive);
}

TEST_CASE("classify_stream never claims proof strength") {
    auto is_heuristic = [](Verdict v) {
        return v == Verdict::evidence_av_zero ||
               v == Verdict::evidence_positive_av || v == Verdict::inconclusive;
    };
    auto champ = champernowne(Base::of(10));
    CHECK(is_heuristic(classify_stream(*champ, 1000, mpq_class(1, 100)).verdict));
    auto prime_like = sparse_series(family("factorial"));
    CHECK(is_heuristic(classify_stream(*prime_like, 5040, mpq_class(1, 100)).verdict));
    auto rat = rational_stream(make_rational(1, 7), Base::of(10));
    CHECK(is_heuristic(classify_stream(*rat, 700, mpq_class(1, 2)).verdict));
}

TEST_CASE("classify_stream input validation") {
    auto s = champernowne(Base::of(10));
    CHECK_THROWS_AS(classify_stream(*s, 0, mpq_class(1, 100)), std::invalid_argument);
    auto s2 = champernowne(Base::of(10));
    CHECK_THROWS_AS(classify_stream(*s2, 10, mpq_class(0)), std::invalid_argument);
    auto s3 = champernowne(Base::of(10));
    CHECK_THROWS_AS(classify_stream(*s3, 10, mpq_class(1)), std::invalid_argument);
}

TEST_CASE("verdict names are stable identifiers") {
    CHECK(std::string(verdict_name(Verdict::rational_with_exact_av)) ==
          "rational-with-exact-average");
    CHECK(std::string(verdict_name(Verdict::irrational_by_criterion)) ==
          "irrational-by-criterion");
    CHECK(std::string(verdict_name(Verdict::evidence_av_zero)) ==
          "evidence-consistent-with-average-zero");
    CHECK(std::string(verdict_name(Verdict::evidence_positive_av)) ==
          "evidence-of-positive-average");
    CHECK(std::string(verdict_name(Verdict::inconclusive)) == "inconclusive");
}

TEST_CASE("chebyshev_check certifies the true violation set") {
    // With A1=1/2 the lower bound genuinely fails at n=2 and nowhere else
    // below 10^4: pi(2)=1 but (1/2)*2/ln 2 = 1/ln 2 > 1.  The check must
    // report that point instead of smoothing over it.
    auto c = chebyshev_check(mpq_class(1, 2), mpq_class(2), 10000);
    REQUIRE(c.violations.size() == 1);
    CHECK(c.violations[0].n == 2);
    CHECK(c.violations[0].prime_count == 1);
    CHECK(c.violations[0].bound == ChebyshevViolation::Bound::lower);
}

TEST_CASE("chebyshev_check passes cleanly with the corrected lower constant") {
    auto c = chebyshev_check(mpq_class(1, 3), mpq_class(2), 10000);
    CHECK(c.violations.empty());
}

TEST_CASE("chebyshev_check flags an overstrong lower constant across the range") {
    auto c = chebyshev_check(mpq_class(2), mpq_class(3), 100);
    CHECK(!c.violations.empty());
    bool found_n8 = false;
    for (const auto& v : c.violations)
        if (v.n == 8 && v.bound == ChebyshevViolation::Bound::lower) {
            found_n8 = true;
            CHECK(v.prime_count == 4); // pi(8) = 4 < 2*8/ln 8 ~ 7.7
        }
    CHECK(found_n8);
}

TEST_CASE("chebyshev_check single point and input validation") {
    auto c = chebyshev_check(mpq_class(1, 3), mpq_class(2), 2);
    CHECK(c.n_max == 2);
    CHECK(c.violations.empty()); // 2/(3 ln 2) ~ 0.96 < pi(2)=1 < 2*2/ln 2 ~ 5.77

    CHECK_THROWS_AS(chebyshev_check(mpq_class(2), mpq_class(1), 100), std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_check(mpq_class(0), mpq_class(2), 100), std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_check(mpq_class(-1, 2), mpq_class(2), 100),
                    std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_check(mpq_class(1, 2), mpq_class(2), 1), std::invalid_argument);
}

TEST_CASE("heuristic verdicts always carry their prefix length") {
    auto s = champernowne(Base::of(10));
    auto r = classify_stream(*s, 12345, mpq_class(1, 100));
    CHECK(r.prefix_n == 12345);
    CHECK(!r.evidence.empty());
    CHECK(r.zero_threshold.has_value());
    CHECK(*r.zero_threshold == mpq_class(1, 100));
}
