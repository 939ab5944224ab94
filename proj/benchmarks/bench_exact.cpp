// Costs of the exact paths: expansion of a rational, prime counting, the
// chunk-merged consume, and certified constant digits.
#include <benchmark/benchmark.h>

#include "decav/chebyshev.hpp"
#include "decav/constants.hpp"
#include "decav/expansion.hpp"
#include "decav/primes.hpp"
#include "decav/rational.hpp"
#include "decav/stats.hpp"

namespace {

void bm_expand(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const decav::Rational r = decav::make_rational(1, q);
    for (auto _ : state) {
        auto e = decav::expand(r, decav::Base::of(10));
        benchmark::DoNotOptimize(e.period.size());
    }
}

void bm_exact_average(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const decav::Rational r = decav::make_rational(1, q);
    for (auto _ : state) {
        auto avg = decav::exact_average(r, decav::Base::of(10));
        benchmark::DoNotOptimize(avg);
    }
}

void bm_pi_count(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decav::pi_count(n));
    }
}

void bm_consume_chunked(benchmark::State& state) {
    const auto threads = static_cast<unsigned>(state.range(0));
    const std::uint64_t n = 1000000;
    for (auto _ : state) {
        auto stats = decav::consume_chunked(
            decav::Base::of(10), [](std::uint64_t start) { return decav::prime_indicator(start); },
            n, decav::CheckpointSchedule::pow10(), threads);
        benchmark::DoNotOptimize(stats.running.digit_sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void bm_constant_digits(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    decav::ConstantSpec spec;
    spec.kind = decav::ConstantSpec::Kind::e;
    for (auto _ : state) {
        auto digits = decav::constant_fraction_digits(spec, n);
        benchmark::DoNotOptimize(digits.data());
    }
}

BENCHMARK(bm_expand)->Arg(999983)->Arg(9999991);
BENCHMARK(bm_exact_average)->Arg(999983);
BENCHMARK(bm_pi_count)->Arg(1000000)->Arg(10000000);
BENCHMARK(bm_consume_chunked)->Arg(1)->Arg(4);
BENCHMARK(bm_constant_digits)->Arg(10000)->Arg(100000);

} // namespace
