#include "decav/digit_stream.hpp"

#include <cstring>
#include <stdexcept>

namespace decav {

std::uint8_t DigitStream::next_slow() {
    buffer_.clear();
    buffer_pos_ = 0;
    produce(buffer_);
    if (buffer_.empty())
        throw std::logic_error("stream '" + label_ + "' produced no digits");
    ++position_;
    return buffer_[buffer_pos_++];
}

void DigitStream::read(std::span<std::uint8_t> out) {
    std::size_t filled = 0;
    while (filled < out.size()) {
        std::size_t avail = buffer_.size() - buffer_pos_;
        if (avail == 0) {
            buffer_.clear();
            buffer_pos_ = 0;
            // produce() sees position() == digits delivered, since the
            // buffer is empty here; its stream_errors are consistent with
            // the consumer's accounting and propagate as-is.
            produce(buffer_);
            if (buffer_.empty())
                throw std::logic_error("stream '" + label_ + "' produced no digits");
            continue;
        }
        std::size_t take = std::min(avail, out.size() - filled);
        std::memcpy(out.data() + filled, buffer_.data() + buffer_pos_, take);
        buffer_pos_ += take;
        filled += take;
        position_ += take;
    }
}

std::vector<digit_t> take_prefix(DigitStream& stream, std::uint64_t n) {
    std::vector<digit_t> out(n);
    stream.read(out);
    return out;
}

} // namespace decav
