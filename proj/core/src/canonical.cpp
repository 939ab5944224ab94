#include "decav/canonical.hpp"

#include <stdexcept>
#include <string>

namespace decav {

CanonicalForm canonicalize(std::span<const digit_t> digits, Base base) {
    std::size_t last_nonzero = digits.size();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!digit_in_range(digits[i], base))
            throw std::invalid_argument("digit value " + std::to_string(digits[i]) +
                                        " out of range for base " + std::to_string(base.value()));
        if (digits[i] != 0)
            last_nonzero = i;
    }
    if (last_nonzero == digits.size())
        throw std::domain_error("zero has no non-terminating expansion");

    CanonicalForm out;
    out.prefix.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(last_nonzero) + 1);
    out.prefix.back() -= 1;
    out.period.push_back(static_cast<digit_t>(base.max_digit()));
    return out;
}

} // namespace decav
