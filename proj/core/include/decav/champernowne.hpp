#pragma once

#include <memory>

#include "decav/base.hpp"
#include "decav/digit_stream.hpp"

namespace decav {

// The Champernowne-style stream for any base: the positive integers rendered
// in base b and concatenated, 0.1 2 3 ... (b-1) 10 11 12 ...
// In base 10 this is 0.123456789101112...
std::unique_ptr<DigitStream> champernowne(Base base);

} // namespace decav
