#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace decav {

// Integer radix in [2, 36]. The cap keeps text rendering to one character
// per digit (0-9 then a-z), which the digit-file format relies on.
class Base {
public:
    static constexpr int min_value = 2;
    static constexpr int max_value = 36;

    static Base of(int value) {
        if (value < min_value)
            throw std::out_of_range("base must be >= 2, got " + std::to_string(value));
        if (value > max_value)
            throw std::out_of_range("base must be <= 36, got " + std::to_string(value));
        return Base(value);
    }

    int value() const noexcept { return value_; }
    unsigned max_digit() const noexcept { return static_cast<unsigned>(value_) - 1; }

    friend bool operator==(Base a, Base b) noexcept { return a.value_ == b.value_; }
    friend bool operator!=(Base a, Base b) noexcept { return a.value_ != b.value_; }

private:
    explicit Base(int value) noexcept : value_(value) {}
    int value_;
};

// One digit of a positional expansion, stored as its numeric value (never as
// a character).
using digit_t = std::uint8_t;

inline bool digit_in_range(digit_t d, Base base) noexcept {
    return d <= base.max_digit();
}

// '0'-'9' then 'a'-'z'; digit must be < 36.
char digit_to_char(unsigned digit);

// Inverse of digit_to_char, restricted to the given base. Throws
// std::invalid_argument for characters outside the base's alphabet.
unsigned digit_from_char(char c, Base base);

std::string render_digits(std::span<const digit_t> digits);

} // namespace decav
