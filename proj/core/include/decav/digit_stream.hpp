#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "decav/base.hpp"
#include "decav/errors.hpp"

namespace decav {

// Pull-based, single-consumer, conceptually infinite digit source.
//
// Producers implement produce(), appending digits in whatever block size is
// natural to them; this base class owns buffering and position accounting.
// Streams are not rewindable — to restart or to start mid-sequence,
// construct a new stream from the same specification (construction is
// deterministic for every generator in this library).
class DigitStream {
public:
    virtual ~DigitStream() = default;
    DigitStream(const DigitStream&) = delete;
    DigitStream& operator=(const DigitStream&) = delete;

    Base base() const noexcept { return base_; }
    const std::string& label() const noexcept { return label_; }

    // Digits delivered to the consumer so far.
    std::uint64_t position() const noexcept { return position_; }

    std::uint8_t next() {
        if (buffer_pos_ < buffer_.size()) {
            ++position_;
            return buffer_[buffer_pos_++];
        }
        return next_slow();
    }

    // Fills `out` completely, or delivers the digits that exist and rethrows
    // the producer's stream_error (whose position() marks the first missing
    // digit). Digits copied into `out` before the throw are counted in
    // position().
    void read(std::span<std::uint8_t> out);

protected:
    DigitStream(Base base, std::string label)
        : base_(base), label_(std::move(label)) {}

    // Append at least one digit to `buf`, or throw a stream_error carrying
    // the producer's absolute digit index. Called only when the internal
    // buffer is fully drained, so that index always equals position().
    virtual void produce(std::vector<std::uint8_t>& buf) = 0;

private:
    std::uint8_t next_slow();

    Base base_;
    std::string label_;
    std::uint64_t position_ = 0;
    std::vector<std::uint8_t> buffer_;
    std::size_t buffer_pos_ = 0;
};

// First n digits of the stream, starting at its current position.
std::vector<digit_t> take_prefix(DigitStream& stream, std::uint64_t n);

} // namespace decav
