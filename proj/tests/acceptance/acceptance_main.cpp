// Acceptance gate for the digit-average engine. Ten criteria, each printed
// as one [PASS]/[FAIL] line; the exit code is the number of failures.
//
// The criteria rest on finite, mechanically checkable facts: exact rational
// identities (1-3, 9), equality against independently coded oracles (4-7),
// and certified directed-rounding inequalities (8). Limit statements
// themselves are not terminally verifiable by computation; criterion 10
// records that boundary explicitly.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "decav/champernowne.hpp"
#include "decav/chebyshev.hpp"
#include "decav/classify.hpp"
#include "decav/constants.hpp"
#include "decav/digit_file.hpp"
#include "decav/expansion.hpp"
#include "decav/primes.hpp"
#include "decav/rational.hpp"
#include "decav/report.hpp"
#include "decav/sparse.hpp"
#include "decav/stats.hpp"

#include "oracles/oracles.hpp"

namespace {

int g_failed = 0;
std::vector<std::string> g_notes; // indented detail lines for the current criterion

void note(const std::string& line) { g_notes.push_back(line); }

void run_criterion(int index, const std::string& title,
                   const std::function<bool()>& body) {
    g_notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note(std::string("unexpected exception: ") + e.what());
        ok = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%s] %2d. %s (%.2fs)\n", ok ? "PASS" : "FAIL", index,
                title.c_str(), secs);
    for (const auto& line : g_notes)
        std::printf("       %s\n", line.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failed;
}

bool check(bool cond, const std::string& on_fail) {
    if (!cond)
        note(on_fail);
    return cond;
}

std::string rat(const decav::Rational& r) { return decav::rational_to_string(r); }

// ---------------------------------------------------------------- criterion 1
// Every proper fraction p/q with q <= 200, in four bases, must agree with a
// long-division oracle that uses Brent cycle detection instead of a
// remainder-position table: identical preperiod, identical period, and an
// exact match between exact_average and the oracle's period-digit mean.
bool criterion_rational_exactness() {
    const unsigned bases[] = {2, 3, 10, 16};
    std::uint64_t checked = 0;
    for (unsigned b : bases) {
        decav::Base base = decav::Base::of(b);
        for (std::uint64_t q = 2; q <= 200; ++q) {
            for (std::uint64_t p = 1; p < q; ++p) {
                decav::Rational r = decav::make_rational(p, q);
                decav::RationalExpansion got = decav::expand(r, base);
                oracle::Expansion want = oracle::expand(p, q, b);
                if (got.preperiod != want.preperiod || got.period != want.period) {
                    note("expansion mismatch at " + std::to_string(p) + "/" +
                         std::to_string(q) + " base " + std::to_string(b));
                    return false;
                }
                decav::Rational avg = decav::exact_average(r, base);
                if (avg != oracle::period_mean(want)) {
                    note("average mismatch at " + std::to_string(p) + "/" +
                         std::to_string(q) + " base " + std::to_string(b) +
                         ": got " + rat(avg));
                    return false;
                }
                ++checked;
            }
        }
    }
    note(std::to_string(checked) + " fractions checked across 4 bases, zero tolerance");
    return checked == 4 * 19900;
}

// ---------------------------------------------------------------- criterion 2
// Fifty fractions per base whose denominators factor entirely over the
// base's primes: the exact average must be b-1, on the nose, every time.
bool criterion_regular_rationals() {
    const unsigned bases[] = {2, 3, 10, 16};
    for (unsigned b : bases) {
        decav::Base base = decav::Base::of(b);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> cases;
        for (std::uint64_t q = 2; q <= 100000 && cases.size() < 50; ++q) {
            // keep q iff dividing out every prime factor of the base leaves 1
            std::uint64_t t = q;
            for (std::uint64_t f = 2; f <= b; ++f)
                if (b % f == 0)
                    while (t % f == 0)
                        t /= f;
            if (t != 1)
                continue;
            for (std::uint64_t p :
                 {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{5},
                  std::uint64_t{7}, q - 1}) {
                if (p >= 1 && p < q && cases.size() < 50)
                    cases.emplace_back(p, q);
            }
        }
        if (!check(cases.size() == 50, "could not assemble 50 regular fractions for base " +
                                           std::to_string(b)))
            return false;
        for (auto [p, q] : cases) {
            decav::Rational r = decav::make_rational(p, q);
            if (!check(decav::is_regular(r, base),
                       std::to_string(p) + "/" + std::to_string(q) +
                           " not recognized as regular in base " + std::to_string(b)))
                return false;
            decav::Rational avg = decav::exact_average(r, base);
            if (avg != decav::Rational(b - 1)) {
                note("average of regular " + std::to_string(p) + "/" + std::to_string(q) +
                     " in base " + std::to_string(b) + " is " + rat(avg) + ", expected " +
                     std::to_string(b - 1));
                return false;
            }
        }
    }
    note("50 regular fractions per base, each with exact average b-1");
    return true;
}

// ---------------------------------------------------------------- criterion 3
// The two accumulation routes must coincide at every checkpoint: the
// digit-weighted frequency table equals digit_sum/n exactly, for every
// generator the library ships, out to a million digits.
bool criterion_identity_everywhere() {
    struct Source {
        std::string name;
        unsigned base;
        std::function<std::unique_ptr<decav::DigitStream>()> make;
    };

    std::filesystem::path fixture = "acceptance_fixture.digits";
    {
        auto digits = oracle::champernowne(10, 100000);
        decav::write_digit_file(fixture, decav::Base::of(10),
                                std::vector<decav::digit_t>(digits.begin(), digits.end()));
    }

    decav::SparseSeriesSpec factorial;
    factorial.family = decav::SparseSeriesSpec::Factorial{};

    std::vector<Source> sources;
    sources.push_back({"champernowne b10", 10, [] { return decav::champernowne(decav::Base::of(10)); }});
    sources.push_back({"champernowne b2", 2, [] { return decav::champernowne(decav::Base::of(2)); }});
    sources.push_back({"prime-indicator", 10, [] { return decav::prime_indicator(); }});
    sources.push_back({"sparse factorial", 10, [factorial] { return decav::sparse_series(factorial); }});
    sources.push_back({"rational 1/7", 10, [] {
                           return decav::rational_stream(decav::make_rational(1, 7),
                                                         decav::Base::of(10));
                       }});
    sources.push_back({"digit-file", 10, [fixture] { return decav::from_digit_file(fixture); }});
    sources.push_back({"sqrt(2)", 10, [] {
                           decav::ConstantSpec s;
                           s.kind = decav::ConstantSpec::Kind::sqrt;
                           s.sqrt_arg = 2;
                           return decav::constant_digits(s);
                       }});
    sources.push_back({"e", 10, [] {
                           decav::ConstantSpec s;
                           s.kind = decav::ConstantSpec::Kind::e;
                           return decav::constant_digits(s);
                       }});
    sources.push_back({"pi", 10, [] {
                           decav::ConstantSpec s;
                           s.kind = decav::ConstantSpec::Kind::pi;
                           return decav::constant_digits(s);
                       }});

    bool all_ok = true;
    for (const auto& src : sources) {
        // the digit-file fixture only holds 1e5 digits; everything else runs to 1e6
        std::uint64_t up_to = src.name == "digit-file" ? 100000 : 1000000;
        decav::Base base = decav::Base::of(src.base);
        decav::StreamStats stats(base);
        auto stream = src.make();
        decav::consume(stats, *stream, up_to, decav::CheckpointSchedule::pow10());
        std::uint64_t verified = 0;
        for (const auto& cp : stats.running.checkpoints) {
            decav::FrequencyProfile profile(base);
            profile.counts = cp.counts;
            profile.n = cp.n;
            decav::Rational by_counts = decav::weighted_average(profile);
            decav::Rational by_sum = cp.average();
            std::uint64_t total =
                std::accumulate(cp.counts.begin(), cp.counts.end(), std::uint64_t{0});
            if (by_counts != by_sum || total != cp.n) {
                note(src.name + ": identity broke at n=" + std::to_string(cp.n));
                all_ok = false;
                break;
            }
            ++verified;
        }
        if (verified != stats.running.checkpoints.size())
            all_ok = false;
    }
    std::filesystem::remove(fixture);
    if (all_ok)
        note("9 generators, identity exact at every power-of-ten checkpoint");
    return all_ok;
}

// ---------------------------------------------------------------- criterion 4
// Prime-indicator running averages are pi(n)/n by construction; here the
// engine's checkpoints must equal the counts from a plain full-array sieve,
// and the five decade values must strictly decrease.
bool criterion_prime_indicator() {
    auto flags = oracle::sieve(1000000);
    decav::StreamStats stats(decav::Base::of(10));
    auto stream = decav::prime_indicator();
    decav::consume(stats, *stream, 1000000, decav::CheckpointSchedule::pow10());

    // frozen oracle counts, computed by the sieve before the main build
    if (!check(oracle::pi(100, flags) == 25, "sieve disagrees with pi(100)=25"))
        return false;
    if (!check(oracle::pi(1000000, flags) == 78498, "sieve disagrees with pi(10^6)=78498"))
        return false;

    std::vector<decav::Rational> decades;
    for (const auto& cp : stats.running.checkpoints) {
        if (cp.n < 100)
            continue;
        decav::Rational want = decav::make_rational(oracle::pi(cp.n, flags), cp.n);
        if (cp.average() != want) {
            note("average at n=" + std::to_string(cp.n) + " is " + rat(cp.average()) +
                 ", sieve says " + rat(want));
            return false;
        }
        decades.push_back(cp.average());
    }
    if (!check(decades.size() == 5, "expected checkpoints at 10^2..10^6"))
        return false;
    for (std::size_t i = 1; i < decades.size(); ++i)
        if (!check(decades[i] < decades[i - 1],
                   "pi(n)/n failed to decrease between decades " + std::to_string(i - 1) +
                       " and " + std::to_string(i)))
            return false;
    note("averages equal pi(n)/n from the sieve at n=10^2..10^6 and strictly decrease");
    return true;
}

// ---------------------------------------------------------------- criterion 5
// The factorial-support series: exactly the factorials 1!,...,7! lie in the
// first 5040 positions, so the 5040-digit average is 7/5040; and the
// classifier must call the family irrational with analytic limit 0.
bool criterion_factorial_series() {
    decav::SparseSeriesSpec spec;
    spec.family = decav::SparseSeriesSpec::Factorial{};

    decav::StreamStats stats(decav::Base::of(10));
    auto stream = decav::sparse_series(spec);
    decav::consume(stats, *stream, 5040, decav::CheckpointSchedule::at({5040}));
    decav::Rational avg = stats.running.average();
    if (!check(avg == decav::make_rational(7, 5040),
               "5040-digit average is " + rat(avg) + ", expected 7/5040"))
        return false;

    auto report = decav::classify_sparse(spec);
    if (!check(report.verdict == decav::Verdict::irrational_by_criterion,
               "factorial series not classified irrational"))
        return false;
    if (!check(report.analytic_limit.has_value() &&
                   *report.analytic_limit == decav::Rational(0),
               "analytic limit is not 0"))
        return false;
    note("first-5040 average 7/5040 exactly; verdict irrational-by-criterion, limit 0");
    return true;
}

// ---------------------------------------------------------------- criterion 6
// Champernowne decade checkpoints out to 10^7 must match a string-
// concatenation oracle digit-sum for digit-sum, and the gap |a_n - 9/2| at
// n=10^7 must equal the oracle-derived constant 565431/2000000.
bool criterion_champernowne() {
    const std::uint64_t limit = 10000000;
    auto oracle_digits = oracle::champernowne(10, limit);

    decav::StreamStats stats(decav::Base::of(10));
    auto stream = decav::champernowne(decav::Base::of(10));
    decav::consume(stats, *stream, limit, decav::CheckpointSchedule::pow10());

    // running digit sums of the oracle string at powers of ten
    std::vector<std::pair<std::uint64_t, decav::u128>> oracle_sums;
    decav::u128 sum = 0;
    std::uint64_t next = 10;
    for (std::uint64_t i = 0; i < limit; ++i) {
        sum += oracle_digits[i];
        if (i + 1 == next) {
            oracle_sums.emplace_back(next, sum);
            next *= 10;
        }
    }

    std::size_t oi = 0;
    for (const auto& cp : stats.running.checkpoints) {
        while (oi < oracle_sums.size() && oracle_sums[oi].first < cp.n)
            ++oi;
        if (oi >= oracle_sums.size() || oracle_sums[oi].first != cp.n) {
            note("no oracle sum for checkpoint n=" + std::to_string(cp.n));
            return false;
        }
        if (cp.digit_sum != oracle_sums[oi].second) {
            note("digit sum mismatch at n=" + std::to_string(cp.n) + ": engine " +
                 decav::u128_to_string(cp.digit_sum) + ", oracle " +
                 decav::u128_to_string(oracle_sums[oi].second));
            return false;
        }
    }

    const auto& last = stats.running.checkpoints.back();
    if (!check(last.n == limit, "final checkpoint is not 10^7"))
        return false;
    decav::Rational gap = last.average() - decav::make_rational(9, 2);
    if (gap < 0)
        gap = -gap;
    decav::Rational frozen = decav::make_rational(565431, 2000000);
    if (!check(gap == frozen, "|a_n - 9/2| at 10^7 is " + rat(gap) + ", oracle constant is " +
                                  rat(frozen)))
        return false;
    note("checkpoint sums match concatenation oracle to 10^7; |a_{10^7} - 9/2| = 565431/2000000");
    return true;
}

// ---------------------------------------------------------------- criterion 7
// Constant streams vs second algorithms: mpz_sqrt scaling vs Newton isqrt
// for sqrt(2), binary splitting vs certified direct summation for e (both
// to 10^4 digits), and Machin arctans vs a streaming spigot for pi (10^3).
bool criterion_constant_digits() {
    auto render = [](const std::vector<decav::digit_t>& v) {
        std::string s;
        s.reserve(v.size());
        for (auto d : v)
            s.push_back(static_cast<char>('0' + d));
        return s;
    };

    decav::ConstantSpec sqrt2;
    sqrt2.kind = decav::ConstantSpec::Kind::sqrt;
    sqrt2.sqrt_arg = 2;
    if (!check(render(decav::constant_fraction_digits(sqrt2, 10000)) ==
                   oracle::sqrt_digits(2, 10000),
               "sqrt(2) digits diverge from the Newton-isqrt oracle"))
        return false;

    decav::ConstantSpec e;
    e.kind = decav::ConstantSpec::Kind::e;
    if (!check(render(decav::constant_fraction_digits(e, 10000)) == oracle::e_digits(10000),
               "e digits diverge from the certified-series oracle"))
        return false;

    decav::ConstantSpec pi;
    pi.kind = decav::ConstantSpec::Kind::pi;
    if (!check(render(decav::constant_fraction_digits(pi, 1000)) == oracle::pi_digits(1000),
               "pi digits diverge from the spigot oracle"))
        return false;

    note("sqrt(2), e to 10^4 digits and pi to 10^3: exact equality with second algorithms");
    return true;
}

// ---------------------------------------------------------------- criterion 8
// The stated gate: A1=1/2, A2=2 with zero violations on 2 <= n <= 10^6.
// The gate as stated is false at exactly one point, and the certified check
// is required to say so rather than paper over it. pi(2) = 1, while the
// strict lower bound at n=2 demands (1/2)*2/ln 2 = 1/ln 2 ~ 1.4427 < pi(2);
// the minimum of pi(n)*ln(n)/n on the range is ln(2)/2 ~ 0.3466, attained
// at n=2, so the largest workable lower constant is anything below that --
// e.g. 1/3, which the supplementary run below certifies violation-free.
bool criterion_chebyshev() {
    auto res = decav::chebyshev_check(decav::make_rational(1, 2), decav::Rational(2), 1000000);
    bool clean = res.violations.empty();
    if (!clean) {
        note("stated gate: zero violations for A1=1/2, A2=2 on 2 <= n <= 10^6");
        note("certified result: " + std::to_string(res.violations.size()) + " violation(s)");
        for (const auto& v : res.violations) {
            note("  n=" + std::to_string(v.n) + "  pi(n)=" + std::to_string(v.prime_count) +
                 "  failing bound: " +
                 (v.bound == decav::ChebyshevViolation::Bound::lower ? "lower" : "upper"));
        }
        note("analysis: at n=2 the strict lower bound needs 1/ln 2 ~ 1.4427 < pi(2) = 1,");
        note("which is false; min of pi(n)*ln(n)/n over the range is ln(2)/2 ~ 0.3466 at n=2,");
        note("so no A1 >= ln(2)/2 can pass. The pair holds for every n >= 3.");
        auto fixed = decav::chebyshev_check(decav::make_rational(1, 3), decav::Rational(2),
                                            1000000);
        note("supplementary (not the gate): A1=1/3, A2=2 on the same range -> " +
             std::to_string(fixed.violations.size()) + " violations" +
             (fixed.violations.empty() ? " (certified clean)" : ""));
    }
    return clean;
}

// ---------------------------------------------------------------- criterion 9
// Chunked runs merge partial tallies; the serialized report must be
// byte-identical to the single-pass run, in both machine formats.
bool criterion_chunk_determinism() {
    auto make_config = [](unsigned chunks, decav::OutputFormat fmt) {
        decav::RunConfig cfg;
        cfg.command = decav::Command::avg;
        decav::SubjectSpec subject;
        subject.kind = decav::SubjectKind::prime_indicator;
        cfg.subject = subject;
        cfg.prefix = 1000000;
        cfg.schedule = decav::CheckpointSchedule::pow10();
        cfg.format = fmt;
        cfg.chunks = chunks;
        cfg.timing = false;
        return cfg;
    };
    for (auto fmt : {decav::OutputFormat::json, decav::OutputFormat::csv}) {
        std::string single = decav::run_to_string(make_config(1, fmt));
        std::string chunked = decav::run_to_string(make_config(4, fmt));
        if (!check(!single.empty() && single == chunked,
                   std::string("chunked output differs from single-pass (") +
                       std::string(decav::format_name(fmt)) + ")"))
            return false;
    }
    note("prime-indicator to 10^6: 4-chunk and single-pass reports byte-identical (json, csv)");
    return true;
}

// --------------------------------------------------------------- criterion 10
// Scope note. The averages under test are limits; no finite computation can
// verify a limit. This gate therefore certifies exact finite-n identities
// (1-3, 9), equality with independent oracles (4-7), and directed-rounding
// inequalities (8) -- and claims nothing beyond them.
bool criterion_scope_note() {
    note("limit claims are not terminally verifiable; this gate checks exact finite facts:");
    note("identities (1-3, 9), oracle equivalence (4-7), certified inequalities (8)");
    return true;
}

} // namespace

int main() {
    std::printf("acceptance: exact and empirical digit-average engine\n");
    run_criterion(1, "rational expansions and averages vs long-division oracle",
                  criterion_rational_exactness);
    run_criterion(2, "regular rationals: exact average is b-1", criterion_regular_rationals);
    run_criterion(3, "count/sum identity at every checkpoint, all generators, to 10^6",
                  criterion_identity_everywhere);
    run_criterion(4, "prime-indicator averages equal pi(n)/n from an independent sieve",
                  criterion_prime_indicator);
    run_criterion(5, "factorial-support series: 7/5040 at n=5040, classified irrational",
                  criterion_factorial_series);
    run_criterion(6, "champernowne checkpoints vs concatenation oracle to 10^7",
                  criterion_champernowne);
    run_criterion(7, "constant digits vs second algorithms (sqrt2, e: 10^4; pi: 10^3)",
                  criterion_constant_digits);
    run_criterion(8, "chebyshev bounds A1=1/2, A2=2 violation-free on 2 <= n <= 10^6",
                  criterion_chebyshev);
    run_criterion(9, "chunk-parallel reports byte-identical to single-pass",
                  criterion_chunk_determinism);
    run_criterion(10, "scope: finite identities and certified bounds only",
                  criterion_scope_note);

    std::printf("summary: %d/10 passed, %d failed\n", 10 - g_failed, g_failed);
    return g_failed;
}
