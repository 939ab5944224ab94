#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>

#include "decav/base.hpp"
#include "decav/digit_stream.hpp"

namespace decav {

// Digit-file format: a single header line
//   base=<b> count=<n>
// followed by exactly one character per digit (0-9 then a-z) and an optional
// final newline. The header's count is the number of digits the file claims;
// the file must actually hold at least that many digit bytes.
struct DigitFileInfo {
    std::filesystem::path path;
    Base base;
    std::uint64_t declared_count;
    std::uint64_t header_bytes; // offset of the first digit byte
};

// Parses and validates the header, and checks the file is long enough for
// its declared count. Throws io_error on open failure or a malformed/short
// file.
DigitFileInfo inspect_digit_file(const std::filesystem::path& path);

// Streams the file's digits. Pulling past the declared count raises
// truncation_error at that position; a byte outside the base's alphabet
// raises decode_error carrying both the digit position and the byte offset.
std::unique_ptr<DigitStream> from_digit_file(const std::filesystem::path& path);

void write_digit_file(const std::filesystem::path& path, Base base,
                      std::span<const digit_t> digits);

} // namespace decav
