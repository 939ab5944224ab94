#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace decav {

// Root of the library's runtime error hierarchy. Precondition violations
// (bad digits, bad parameters) use the std:: logic errors instead.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised while pulling digits from a stream. position() is the 0-based index
// of the first digit that could not be delivered; every earlier requested
// digit was delivered normally before the throw.
class stream_error : public error {
public:
    stream_error(const std::string& what, std::uint64_t position)
        : error(what), position_(position) {}
    std::uint64_t position() const noexcept { return position_; }

private:
    std::uint64_t position_;
};

// A finite source ran out while the stream contract promises an infinite
// digit sequence (e.g. a digit file read past its declared count).
class truncation_error : public stream_error {
public:
    using stream_error::stream_error;
};

// A byte in a digit file does not decode to a digit of the declared base.
class decode_error : public stream_error {
public:
    decode_error(const std::string& what, std::uint64_t position, std::uint64_t byte_offset)
        : stream_error(what, position), byte_offset_(byte_offset) {}
    std::uint64_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::uint64_t byte_offset_;
};

// Filesystem-level failure (open/read/write), distinct from decode errors
// only in that no byte was readable at all.
class io_error : public error {
public:
    using error::error;
};

// Command-line or configuration rejection; the CLI maps this to exit code 2.
class usage_error : public error {
public:
    using error::error;
};

// A serialized checkpoint row failed the digit-sum vs. frequency-table
// cross-check. Reports are never emitted past one of these.
class identity_violation : public error {
public:
    using error::error;
};

} // namespace decav
