#include "decav/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace decav {

namespace {

std::uint64_t isqrt64(std::uint64_t x) {
    auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s * s > x)
        --s;
    while ((s + 1) * (s + 1) <= x)
        ++s;
    return s;
}

} // namespace

PrimeSieve::PrimeSieve(std::uint32_t segment_size) : segment_size_(segment_size) {
    if (segment_size_ < 64)
        throw std::invalid_argument("segment size must be >= 64");
}

void PrimeSieve::grow_base_primes(std::uint64_t need) {
    if (need <= base_limit_)
        return;
    std::uint64_t limit = std::max<std::uint64_t>({need, base_limit_ * 2, 1024});
    std::vector<std::uint8_t> composite(limit + 1, 0);
    base_primes_.clear();
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        base_primes_.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = 1;
    }
    base_limit_ = limit;
}

void PrimeSieve::composite_flags(std::uint64_t lo, std::uint32_t len,
                                 std::vector<std::uint8_t>& out) {
    out.assign(len, 0);
    if (len == 0)
        return;
    std::uint64_t hi = lo + len - 1;
    for (std::uint64_t v = lo; v < 2 && v <= hi; ++v)
        out[v - lo] = 1;
    grow_base_primes(isqrt64(hi));
    for (std::uint64_t p : base_primes_) {
        if (p * p > hi)
            break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t m = start; m <= hi; m += p)
            out[m - lo] = 1;
    }
}

void PrimeSieve::for_primes(std::uint64_t lo, std::uint64_t hi,
                            const std::function<void(std::uint64_t)>& fn) {
    if (hi < lo)
        return;
    std::vector<std::uint8_t> flags;
    for (std::uint64_t seg = lo; seg <= hi;) {
        std::uint32_t len =
            static_cast<std::uint32_t>(std::min<std::uint64_t>(segment_size_, hi - seg + 1));
        composite_flags(seg, len, flags);
        for (std::uint32_t i = 0; i < len; ++i)
            if (!flags[i])
                fn(seg + i);
        seg += len;
    }
}

std::uint64_t pi_count(std::uint64_t n, std::uint32_t segment_size) {
    if (n < 2)
        return 0;
    std::uint64_t count = 0;
    PrimeSieve sieve(segment_size);
    sieve.for_primes(2, n, [&](std::uint64_t) { ++count; });
    return count;
}

namespace {

class PrimeIndicatorStream final : public DigitStream {
public:
    PrimeIndicatorStream(std::uint64_t start, std::uint32_t segment_size)
        : DigitStream(Base::of(10), "prime-indicator"), sieve_(segment_size), pos_(start) {
        if (start == 0)
            throw std::invalid_argument("start position is 1-based");
    }

protected:
    void produce(std::vector<std::uint8_t>& buf) override {
        std::uint32_t len = std::min<std::uint32_t>(sieve_.segment_size(), 1u << 16);
        sieve_.composite_flags(pos_, len, flags_);
        buf.resize(len);
        for (std::uint32_t i = 0; i < len; ++i)
            buf[i] = flags_[i] ? 0 : 1;
        pos_ += len;
    }

private:
    PrimeSieve sieve_;
    std::uint64_t pos_;
    std::vector<std::uint8_t> flags_;
};

} // namespace

std::unique_ptr<DigitStream> prime_indicator(std::uint64_t start_position,
                                             std::uint32_t segment_size) {
    return std::make_unique<PrimeIndicatorStream>(start_position, segment_size);
}

} // namespace decav
