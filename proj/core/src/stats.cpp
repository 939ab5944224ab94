#include "decav/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace decav {

namespace {

Rational ratio(u128 num, std::uint64_t den) {
    return make_rational(integer_from_u128(num), Integer(static_cast<unsigned long>(den)));
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
    return make_rational(Integer(static_cast<unsigned long>(num)),
                         Integer(static_cast<unsigned long>(den)));
}

void require_nonempty(std::uint64_t n, const char* what) {
    if (n == 0)
        throw std::domain_error(std::string(what) + " undefined for an empty prefix");
}

// Tallies one block into both accumulation routes. The per-digit bound check
// is the last line of defence for the "no digit out of range ever escapes a
// stream" contract; it is branch-predictable and cheap.
void tally_block(StreamStats& stats, const std::uint8_t* data, std::size_t len) {
    const unsigned max_digit = stats.base().max_digit();
    std::uint64_t block_sum = 0;
    auto& counts = stats.profile.counts;
    for (std::size_t i = 0; i < len; ++i) {
        std::uint8_t d = data[i];
        if (d > max_digit)
            throw std::logic_error("digit value " + std::to_string(d) +
                                   " escaped a base-" + std::to_string(stats.base().value()) +
                                   " stream");
        counts[d] += 1;
        block_sum += d;
    }
    stats.profile.n += len;
    stats.running.n += len;
    stats.running.digit_sum += block_sum;
}

Checkpoint snapshot(const StreamStats& stats) {
    Checkpoint cp;
    cp.n = stats.running.n;
    cp.digit_sum = stats.running.digit_sum;
    cp.counts = stats.profile.counts;
    return cp;
}

} // namespace

Rational FrequencyProfile::frequency(unsigned digit) const {
    require_nonempty(n, "digit frequency");
    if (digit >= counts.size())
        throw std::invalid_argument("digit value out of range");
    return ratio(counts[digit], n);
}

Rational Checkpoint::average() const {
    require_nonempty(n, "prefix average");
    return ratio(digit_sum, n);
}

Rational Checkpoint::frequency(unsigned digit) const {
    require_nonempty(n, "digit frequency");
    if (digit >= counts.size())
        throw std::invalid_argument("digit value out of range");
    return ratio(counts[digit], n);
}

Rational RunningStats::average() const {
    require_nonempty(n, "prefix average");
    return ratio(digit_sum, n);
}

CheckpointSchedule CheckpointSchedule::pow10() {
    return CheckpointSchedule{Kind::pow10, {}};
}

CheckpointSchedule CheckpointSchedule::pow2() {
    return CheckpointSchedule{Kind::pow2, {}};
}

CheckpointSchedule CheckpointSchedule::at(std::vector<std::uint64_t> points) {
    for (std::uint64_t p : points)
        if (p == 0)
            throw std::invalid_argument("checkpoint positions are 1-based");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return CheckpointSchedule{Kind::explicit_list, std::move(points)};
}

std::vector<std::uint64_t> CheckpointSchedule::materialize(std::uint64_t up_to) const {
    std::vector<std::uint64_t> out;
    switch (kind) {
    case Kind::pow10:
    case Kind::pow2: {
        std::uint64_t step = kind == Kind::pow10 ? 10 : 2;
        for (std::uint64_t v = step; v < up_to; v *= step) {
            out.push_back(v);
            if (v > up_to / step) // next multiply would overflow
                break;
        }
        break;
    }
    case Kind::explicit_list:
        for (std::uint64_t p : points) {
            if (p > up_to)
                throw std::invalid_argument("checkpoint position " + std::to_string(p) +
                                            " exceeds the consumed prefix " + std::to_string(up_to));
            if (p < up_to)
                out.push_back(p);
        }
        break;
    }
    out.push_back(up_to); // the final state is always checkpointed
    return out;
}

void consume(StreamStats& stats, DigitStream& stream, std::uint64_t up_to,
             const CheckpointSchedule& schedule) {
    if (up_to < stats.running.n)
        throw std::invalid_argument("cannot consume backwards: stream already at " +
                                    std::to_string(stats.running.n));
    if (up_to == stats.running.n)
        return;

    std::vector<std::uint64_t> points = schedule.materialize(up_to);
    std::vector<std::uint8_t> buf(1u << 16);

    for (std::uint64_t point : points) {
        if (point <= stats.running.n)
            continue; // already crossed in an earlier consume() call
        while (stats.running.n < point) {
            std::size_t want = static_cast<std::size_t>(
                std::min<std::uint64_t>(buf.size(), point - stats.running.n));
            std::uint64_t before = stream.position();
            try {
                stream.read(std::span<std::uint8_t>(buf.data(), want));
            } catch (const stream_error& e) {
                // Digits delivered before the failure still count.  The
                // original error rides along as the nested cause so callers
                // can tell a corrupt source from a plain compute failure.
                std::uint64_t delivered = stream.position() - before;
                tally_block(stats, buf.data(), static_cast<std::size_t>(delivered));
                std::throw_with_nested(partial_result_error(
                    std::string("source failed mid-consume: ") + e.what(), stats));
            }
            tally_block(stats, buf.data(), want);
        }
        stats.running.checkpoints.push_back(snapshot(stats));
    }
}

StreamStats merge(const StreamStats& left, const StreamStats& right) {
    if (left.base() != right.base())
        throw std::invalid_argument("cannot merge stats over different bases");
    if (!right.running.checkpoints.empty())
        throw std::invalid_argument("right-hand stats of a merge must not carry checkpoints "
                                    "(their positions would be relative to the wrong origin)");
    StreamStats out = left;
    for (std::size_t d = 0; d < out.profile.counts.size(); ++d)
        out.profile.counts[d] += right.profile.counts[d];
    out.profile.n += right.profile.n;
    out.running.n += right.running.n;
    out.running.digit_sum += right.running.digit_sum;
    return out;
}

Rational weighted_average(const FrequencyProfile& profile) {
    require_nonempty(profile.n, "weighted average");
    u128 sum = 0;
    for (std::size_t d = 1; d < profile.counts.size(); ++d)
        sum += static_cast<u128>(profile.counts[d]) * d;
    return ratio(sum, profile.n);
}

NormalityDeviation normality_deviation(const FrequencyProfile& profile,
                                       const RunningStats& running) {
    require_nonempty(profile.n, "normality deviation");
    const int b = profile.base.value();
    Rational uniform(1, b);
    Rational max_dev(0);
    for (int d = 0; d < b; ++d) {
        Rational dev = abs(profile.frequency(static_cast<unsigned>(d)) - uniform);
        if (dev > max_dev)
            max_dev = dev;
    }
    Rational expected(b - 1, 2);
    return NormalityDeviation{max_dev, abs(running.average() - expected)};
}

StreamStats consume_chunked(Base base, const StreamFactory& factory, std::uint64_t up_to,
                            const CheckpointSchedule& schedule, unsigned threads) {
    if (threads == 0)
        throw std::invalid_argument("need at least one worker");
    if (!factory)
        throw std::invalid_argument("chunked consumption needs a positional stream factory");

    std::vector<std::uint64_t> points = schedule.materialize(up_to);
    StreamStats acc(base);

    std::uint64_t prev = 0;
    for (std::uint64_t point : points) {
        std::uint64_t span = point - prev;
        unsigned workers = static_cast<unsigned>(
            std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, span / 1024)));

        std::vector<StreamStats> parts;
        parts.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            parts.emplace_back(base);

        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> failures(workers);
        for (unsigned i = 0; i < workers; ++i) {
            std::uint64_t begin = prev + span * i / workers;       // 0-based
            std::uint64_t end = prev + span * (i + 1) / workers;   // exclusive
            pool.emplace_back([&, i, begin, end] {
                try {
                    auto stream = factory(begin + 1);
                    consume(parts[i], *stream, end - begin, CheckpointSchedule::at({end - begin}));
                    parts[i].running.checkpoints.clear(); // positions are chunk-relative
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            });
        }
        for (auto& t : pool)
            t.join();
        for (auto& f : failures)
            if (f)
                std::rethrow_exception(f);

        // Exact integer addition is associative, so this in-order fold
        // reproduces the single-pass tally bit for bit.
        for (auto& part : parts)
            acc = merge(acc, part);
        acc.running.checkpoints.push_back(snapshot(acc));
        prev = point;
    }
    return acc;
}

} // namespace decav
