#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "decav/base.hpp"
#include "decav/digit_stream.hpp"
#include "decav/errors.hpp"
#include "decav/rational.hpp"

namespace decav {

// Occurrence counts per digit value over a consumed prefix.
struct FrequencyProfile {
    explicit FrequencyProfile(Base b) : base(b) {}

    Base base;
    std::array<std::uint64_t, Base::max_value> counts{};
    std::uint64_t n = 0;

    // counts[digit] / n, exact. Requires n >= 1.
    Rational frequency(unsigned digit) const;
};

// Snapshot of the tally at one scheduled position. Carries the full count
// table so per-digit frequencies can be reported (and cross-checked against
// the digit sum) at every checkpoint, not just the final one.
struct Checkpoint {
    std::uint64_t n = 0;
    u128 digit_sum = 0;
    std::array<std::uint64_t, Base::max_value> counts{};

    Rational average() const;                 // digit_sum / n
    Rational frequency(unsigned digit) const; // counts[digit] / n
};

struct RunningStats {
    std::uint64_t n = 0;
    u128 digit_sum = 0; // exact: 128 bits outlast any feasible run
    std::vector<Checkpoint> checkpoints;

    Rational average() const; // requires n >= 1
};

// The two accumulation routes are deliberately redundant: the count table
// and the running digit sum are maintained independently, and
// weighted_average(profile) must equal running.average() exactly at every
// point. Consumers (and the report writer) check that identity.
struct StreamStats {
    explicit StreamStats(Base b) : profile(b) {}

    FrequencyProfile profile;
    RunningStats running;

    Base base() const noexcept { return profile.base; }
};

struct CheckpointSchedule {
    enum class Kind { pow10, pow2, explicit_list };

    Kind kind = Kind::pow10;
    std::vector<std::uint64_t> points; // explicit_list only; ascending, >= 1

    static CheckpointSchedule pow10();
    static CheckpointSchedule pow2();
    static CheckpointSchedule at(std::vector<std::uint64_t> points);

    // Ascending scheduled positions <= up_to, with up_to itself always
    // appended as the final checkpoint. Explicit points beyond up_to are a
    // contract violation (std::invalid_argument).
    std::vector<std::uint64_t> materialize(std::uint64_t up_to) const;

    friend bool operator==(const CheckpointSchedule&, const CheckpointSchedule&) = default;
};

// Carries everything tallied before a finite source gave out, so a caller
// can still report on the digits that did arrive.
class partial_result_error : public error {
public:
    partial_result_error(const std::string& what, StreamStats stats)
        : error(what), partial_(std::move(stats)) {}
    const StreamStats& partial() const noexcept { return partial_; }

private:
    StreamStats partial_;
};

// Advances stats over the stream until exactly `up_to` digits have been
// consumed in total, appending a checkpoint at every scheduled position
// crossed during this call. up_to equal to the current count is a no-op;
// smaller is std::invalid_argument (streams cannot rewind).
void consume(StreamStats& stats, DigitStream& stream, std::uint64_t up_to,
             const CheckpointSchedule& schedule);

// Componentwise sum. `right` must describe the digits immediately following
// `left`'s block: same base, and no checkpoints of its own (positions inside
// a continuation block would be relative to the wrong origin).
StreamStats merge(const StreamStats& left, const StreamStats& right);

// sum_d d * counts[d] / n, exact. The independent route to the average: must
// coincide with RunningStats::average() always.
Rational weighted_average(const FrequencyProfile& profile);

struct NormalityDeviation {
    Rational max_frequency_dev; // max_d |counts[d]/n - 1/b|
    Rational average_dev;       // |digit_sum/n - (b-1)/2|
};

NormalityDeviation normality_deviation(const FrequencyProfile& profile,
                                       const RunningStats& running);

// Factory returning a stream positioned at a 1-based start offset of the
// underlying digit sequence. Generators that support mid-sequence
// construction expose one of these for chunk-parallel runs.
using StreamFactory = std::function<std::unique_ptr<DigitStream>(std::uint64_t start)>;

// Chunk-parallel consumption: splits each inter-checkpoint span across
// `threads` workers, each tallying its own sub-range from a fresh
// mid-sequence stream, then folds the partial tallies in positional order.
// Exact integer sums make the fold associative, so the result is identical —
// field for field — to single-pass consume with the same schedule.
StreamStats consume_chunked(Base base, const StreamFactory& factory, std::uint64_t up_to,
                            const CheckpointSchedule& schedule, unsigned threads);

} // namespace decav
