#include "decav/expansion.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "decav/canonical.hpp"
#include "decav/errors.hpp"

namespace decav {

namespace {

// |r| mod 1 as a reduced p/q with 0 <= p < q. Digit behaviour ignores sign
// and integer part throughout.
struct FractionalPart {
    Integer num;
    Integer den;
};

FractionalPart fractional_part(const Rational& r) {
    Rational a = abs(r);
    a.canonicalize();
    Integer p = a.get_num() % a.get_den();
    return {p, a.get_den()};
}

void require_nonzero_fraction(const Integer& p) {
    if (p == 0)
        throw std::domain_error("zero has no non-terminating expansion (fractional part is 0)");
}

Integer pow_base(int base, std::size_t exp) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return t;
}

Integer digits_to_integer(std::span<const digit_t> digits, int base) {
    Integer acc = 0;
    for (digit_t d : digits) {
        acc *= base;
        acc += d;
    }
    return acc;
}

} // namespace

RationalExpansion expand(const Rational& r, Base base, std::uint64_t q_limit) {
    auto [p, q] = fractional_part(r);
    require_nonzero_fraction(p);
    if (q_limit >= std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("q_limit must fit 32 bits (the remainder table is O(q))");
    if (q > static_cast<unsigned long>(q_limit))
        throw error("denominator " + q.get_str() + " exceeds the exact-expansion limit " +
                    std::to_string(q_limit) + "; use the digit-stream form instead");

    const std::uint64_t den = q.get_ui();
    const std::uint64_t b = static_cast<std::uint64_t>(base.value());
    std::uint64_t rem = p.get_ui();

    // first_seen[rem] = digit position where the remainder first appeared;
    // the first repeat closes the minimal period.
    constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> first_seen(den, unseen);
    std::vector<digit_t> digits;
    std::uint32_t pos = 0;

    while (true) {
        if (first_seen[rem] != unseen) {
            std::uint32_t start = first_seen[rem];
            RationalExpansion out{base, {}, {}};
            out.preperiod.assign(digits.begin(), digits.begin() + start);
            out.period.assign(digits.begin() + start, digits.end());
            return out;
        }
        first_seen[rem] = pos;
        std::uint64_t t = rem * b;
        digits.push_back(static_cast<digit_t>(t / den));
        rem = t % den;
        ++pos;
        if (rem == 0) { // terminating: rewrite onto the repeating b-1 tail
            CanonicalForm cf = canonicalize(digits, base);
            return RationalExpansion{base, std::move(cf.prefix), std::move(cf.period)};
        }
    }
}

bool is_regular(const Rational& r, Base base) {
    auto [p, q] = fractional_part(r);
    require_nonzero_fraction(p);
    Integer b(base.value());
    while (q != 1) {
        Integer g = gcd(q, b);
        if (g == 1)
            return false;
        q /= g;
    }
    return true;
}

Rational exact_average(const Rational& r, Base base, std::uint64_t q_limit) {
    RationalExpansion e = expand(r, base, q_limit);
    unsigned long sum = 0;
    for (digit_t d : e.period)
        sum += d;
    return make_rational(Integer(sum), Integer(static_cast<unsigned long>(e.period.size())));
}

Rational reconstruct(const RationalExpansion& e) {
    if (e.period.empty())
        throw std::invalid_argument("canonical expansion requires a nonempty period");
    for (digit_t d : e.preperiod)
        if (!digit_in_range(d, e.base))
            throw std::invalid_argument("preperiod digit out of range for base " +
                                        std::to_string(e.base.value()));
    bool all_zero = true;
    for (digit_t d : e.period) {
        if (!digit_in_range(d, e.base))
            throw std::invalid_argument("period digit out of range for base " +
                                        std::to_string(e.base.value()));
        if (d != 0)
            all_zero = false;
    }
    if (all_zero)
        throw std::invalid_argument("period of all zeros is not canonical (expansion would terminate)");

    const int b = e.base.value();
    const std::size_t k = e.preperiod.size();
    const std::size_t m = e.period.size();
    Integer bm_minus_1 = pow_base(b, m) - 1;
    Integer n_pre = digits_to_integer(e.preperiod, b);
    Integer n_per = digits_to_integer(e.period, b);
    return make_rational(n_pre * bm_minus_1 + n_per, pow_base(b, k) * bm_minus_1);
}

std::string expansion_text(const RationalExpansion& e) {
    return "0." + render_digits(e.preperiod) + "(" + render_digits(e.period) + ")_" +
           std::to_string(e.base.value());
}

namespace {

// Streaming long division. A 57-bit denominator cap keeps rem * 36 inside
// 64 bits; anything larger falls back to GMP remainders.
class RationalDigitStream final : public DigitStream {
public:
    RationalDigitStream(const Rational& r, Base base)
        : DigitStream(base, "rational(" + rational_to_string(r) +
                                ", base=" + std::to_string(base.value()) + ")") {
        auto [p, q] = fractional_part(r);
        require_nonzero_fraction(p);
        b_ = static_cast<std::uint64_t>(base.value());
        fast_ = mpz_fits_ulong_p(q.get_mpz_t()) != 0 && q.get_ui() < (1ULL << 57);
        if (fast_) {
            den64_ = q.get_ui();
            rem64_ = p.get_ui();
        } else {
            den_ = q;
            rem_ = p;
        }
    }

protected:
    void produce(std::vector<std::uint8_t>& buf) override {
        constexpr std::size_t batch = 4096;
        if (tail_) {
            buf.assign(batch, static_cast<std::uint8_t>(base().max_digit()));
            return;
        }
        buf.reserve(batch);
        for (std::size_t i = 0; i < batch; ++i) {
            std::uint8_t d;
            bool terminated;
            if (fast_) {
                std::uint64_t t = rem64_ * b_;
                d = static_cast<std::uint8_t>(t / den64_);
                rem64_ = t % den64_;
                terminated = rem64_ == 0;
            } else {
                Integer t = rem_ * static_cast<unsigned long>(b_);
                Integer q;
                mpz_tdiv_qr(q.get_mpz_t(), rem_.get_mpz_t(), t.get_mpz_t(), den_.get_mpz_t());
                d = static_cast<std::uint8_t>(q.get_ui());
                terminated = rem_ == 0;
            }
            buf.push_back(d);
            if (terminated) {
                // Terminating division always ends on a nonzero digit;
                // rewrite it in place and switch to the constant b-1 tail.
                buf.back() -= 1;
                tail_ = true;
                return;
            }
        }
    }

private:
    std::uint64_t b_ = 10;
    bool fast_ = true;
    bool tail_ = false;
    std::uint64_t den64_ = 1;
    std::uint64_t rem64_ = 0;
    Integer den_;
    Integer rem_;
};

} // namespace

std::unique_ptr<DigitStream> rational_stream(const Rational& r, Base base) {
    return std::make_unique<RationalDigitStream>(r, base);
}

} // namespace decav
