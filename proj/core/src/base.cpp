#include "decav/base.hpp"

namespace decav {

char digit_to_char(unsigned digit) {
    if (digit >= 36)
        throw std::invalid_argument("digit value " + std::to_string(digit) + " not renderable (max 35)");
    return digit < 10 ? static_cast<char>('0' + digit)
                      : static_cast<char>('a' + (digit - 10));
}

unsigned digit_from_char(char c, Base base) {
    unsigned v;
    if (c >= '0' && c <= '9')
        v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'z')
        v = static_cast<unsigned>(c - 'a') + 10;
    else
        throw std::invalid_argument(std::string("character '") + c + "' is not a digit");
    if (v > base.max_digit())
        throw std::invalid_argument(std::string("digit '") + c + "' out of range for base " +
                                    std::to_string(base.value()));
    return v;
}

std::string render_digits(std::span<const digit_t> digits) {
    std::string out;
    out.reserve(digits.size());
    for (digit_t d : digits)
        out.push_back(digit_to_char(d));
    return out;
}

} // namespace decav
