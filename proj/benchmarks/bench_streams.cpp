// Digit production rates of the stream generators, reported as
// digits/second. Each iteration pulls a fixed block through the stats
// accumulator so the measured path is the one the CLI actually runs.
#include <benchmark/benchmark.h>

#include "decav/champernowne.hpp"
#include "decav/constants.hpp"
#include "decav/expansion.hpp"
#include "decav/primes.hpp"
#include "decav/rational.hpp"
#include "decav/sparse.hpp"
#include "decav/stats.hpp"

namespace {

void drain(decav::DigitStream& stream, std::uint64_t count, benchmark::State& state) {
    decav::StreamStats stats(decav::Base::of(10));
    decav::consume(stats, stream, count, decav::CheckpointSchedule::at({count}));
    benchmark::DoNotOptimize(stats.running.digit_sum);
    state.SetItemsProcessed(state.items_processed() + static_cast<std::int64_t>(count));
}

void bm_champernowne(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto s = decav::champernowne(decav::Base::of(10));
        drain(*s, n, state);
    }
}

void bm_prime_indicator(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto s = decav::prime_indicator();
        drain(*s, n, state);
    }
}

void bm_sparse_factorial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    decav::SparseSeriesSpec spec;
    spec.family = decav::SparseSeriesSpec::Factorial{};
    for (auto _ : state) {
        auto s = decav::sparse_series(spec);
        drain(*s, n, state);
    }
}

void bm_rational_stream(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const decav::Rational r = decav::make_rational(1, 999983); // long period
    for (auto _ : state) {
        auto s = decav::rational_stream(r, decav::Base::of(10));
        drain(*s, n, state);
    }
}

void bm_constant_sqrt2(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    decav::ConstantSpec spec;
    spec.kind = decav::ConstantSpec::Kind::sqrt;
    spec.sqrt_arg = 2;
    for (auto _ : state) {
        auto s = decav::constant_digits(spec);
        drain(*s, n, state);
    }
}

BENCHMARK(bm_champernowne)->Arg(100000)->Arg(1000000);
BENCHMARK(bm_prime_indicator)->Arg(100000)->Arg(1000000);
BENCHMARK(bm_sparse_factorial)->Arg(1000000);
BENCHMARK(bm_rational_stream)->Arg(1000000);
BENCHMARK(bm_constant_sqrt2)->Arg(100000);

} // namespace
