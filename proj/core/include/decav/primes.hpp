#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "decav/digit_stream.hpp"

namespace decav {

inline constexpr std::uint32_t default_segment_size = 1u << 20;

// Segmented sieve of Eratosthenes. Base primes grow on demand (doubling), so
// one instance can walk ranges of any height in O(segment) memory.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint32_t segment_size = default_segment_size);

    // Marks composites of [lo, lo+len): out[i] != 0 iff lo+i is composite or
    // below 2. Primality is the complement.
    void composite_flags(std::uint64_t lo, std::uint32_t len, std::vector<std::uint8_t>& out);

    // Calls fn(p) for every prime p in [lo, hi], ascending.
    void for_primes(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn);

    std::uint32_t segment_size() const noexcept { return segment_size_; }

private:
    void grow_base_primes(std::uint64_t need);

    std::uint32_t segment_size_;
    std::vector<std::uint64_t> base_primes_;
    std::uint64_t base_limit_ = 1;
};

// Exact count of primes <= n.
std::uint64_t pi_count(std::uint64_t n, std::uint32_t segment_size = default_segment_size);

// Base-10 stream whose n-th digit is 1 iff n is prime:
// 0.0110101000101... Supports construction at any 1-based start position.
std::unique_ptr<DigitStream> prime_indicator(std::uint64_t start_position = 1,
                                             std::uint32_t segment_size = default_segment_size);

} // namespace decav
