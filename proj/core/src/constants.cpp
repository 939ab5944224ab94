#include "decav/constants.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "decav/errors.hpp"
#include "decav/rational.hpp"

namespace decav {

namespace {

Integer pow10z(std::size_t k) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, k);
    return t;
}

// Integer bracket of frac(x) * 10^K: the true floor lies in [lo, hi]. All
// downstream digit extraction works on this bracket, so no digit can ever
// depend on an uncertified tail.
struct ScaledInterval {
    Integer lo;
    Integer hi;
};

// --- sqrt(m) ------------------------------------------------------------
// floor(sqrt(m * 10^(2K))) equals floor(sqrt(m) * 10^K) exactly (nested
// floors commute with multiplication by an integer under sqrt), so the
// bracket is a single point.
ScaledInterval scaled_sqrt(std::uint64_t m, std::size_t K) {
    Integer scaled = Integer(static_cast<unsigned long>(m)) * pow10z(2 * K);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Integer root;
    Integer mz(static_cast<unsigned long>(m));
    mpz_sqrt(root.get_mpz_t(), mz.get_mpz_t());
    Integer frac = s - root * pow10z(K);
    return {frac, frac};
}

// --- e -------------------------------------------------------------------
// Binary splitting of S(a,b) = sum_{j=a}^{b-1} prod_{i=a}^{j} 1/i, so that
// S(1, N+1) = sum_{j=1}^{N} 1/j! and e - 2 = S(1, N+1) - 1 + tail with
// 0 < tail < 2/(N+1)!.
void e_split(std::uint64_t a, std::uint64_t b, Integer& T, Integer& P) {
    if (b - a == 1) {
        T = 1;
        P = static_cast<unsigned long>(a);
        return;
    }
    std::uint64_t m = a + (b - a) / 2;
    Integer T1, P1, T2, P2;
    e_split(a, m, T1, P1);
    e_split(m, b, T2, P2);
    T = T1 * P2 + T2;
    P = P1 * P2;
}

ScaledInterval scaled_e(std::size_t K) {
    // Smallest f with log10(f!) > K+1, i.e. 2 * 10^K < f!; terms run to f-1.
    double need = static_cast<double>(K) + 1.0;
    double acc = 0.0;
    std::uint64_t f = 1;
    while (acc <= need) {
        ++f;
        acc += std::log10(static_cast<double>(f));
    }
    std::uint64_t n_terms = f - 1;

    Integer T, P;
    e_split(1, n_terms + 1, T, P);
    Integer v;
    Integer num = (T - P) * pow10z(K); // (T-P)/P = S - 1 = (e-2) - tail >= 0
    mpz_fdiv_q(v.get_mpz_t(), num.get_mpz_t(), P.get_mpz_t());
    return {v, v + 2};
}

// --- pi ------------------------------------------------------------------
// Machin: pi = 16*atan(1/5) - 4*atan(1/239). Binary splitting of the
// alternating series for atan(1/x):
//   F(a,b) = sum_{i=a}^{b-1} (-1)^i x^{2(b-1-i)} / (2i+1) = T(a,b)/Q(a,b)
// with the partial sum of N leading terms equal to T(0,N)/(Q(0,N)*x^(2N-1)).
void atan_split(std::uint64_t a, std::uint64_t b, unsigned long x_sq, Integer& T, Integer& Q) {
    if (b - a == 1) {
        T = (a % 2 == 0) ? 1 : -1;
        Q = static_cast<unsigned long>(2 * a + 1);
        return;
    }
    std::uint64_t m = a + (b - a) / 2;
    Integer T1, Q1, T2, Q2;
    atan_split(a, m, x_sq, T1, Q1);
    atan_split(m, b, x_sq, T2, Q2);
    Integer xp;
    mpz_ui_pow_ui(xp.get_mpz_t(), x_sq, b - m);
    T = T1 * Q2 * xp + T2 * Q1;
    Q = Q1 * Q2;
}

// floor of the N-term partial sum of atan(1/x), scaled by 10^K; N is chosen
// so the dropped alternating tail is below 10^-(K+1), hence the true value's
// floor lies within +-1 of the returned integer.
Integer scaled_atan(unsigned long x, std::size_t K) {
    const double lx = std::log10(static_cast<double>(x));
    std::uint64_t n_terms = 1;
    while (std::log10(2.0 * n_terms + 1.0) + (2.0 * n_terms + 1.0) * lx <
           static_cast<double>(K) + 2.0)
        ++n_terms;

    Integer T, Q;
    atan_split(0, n_terms, x * x, T, Q);
    Integer xp;
    mpz_ui_pow_ui(xp.get_mpz_t(), x, 2 * n_terms - 1);
    Integer denom = Q * xp;
    Integer num = T * pow10z(K); // partial sums of this series are positive
    Integer v;
    mpz_fdiv_q(v.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    return v;
}

ScaledInterval scaled_pi(std::size_t K) {
    Integer a = scaled_atan(5, K);
    Integer b = scaled_atan(239, K);
    // Each atan bracket is +-1 around its partial-sum floor plus the sub-ulp
    // truncation slack; pushing both through 16x - 4y and subtracting the
    // integer part 3 leaves a constant-width bracket.
    Integer core = 16 * a - 4 * b - 3 * pow10z(K);
    ScaledInterval iv{core - 6, core + 18};
    if (iv.lo < 0)
        iv.lo = 0;
    return iv;
}

// First k fractional digits if every value in the bracket agrees on them.
std::optional<std::vector<digit_t>> leading_digits(const ScaledInterval& iv, std::size_t K,
                                                   std::size_t k) {
    Integer g = pow10z(K - k);
    Integer lo_cut, hi_cut;
    mpz_fdiv_q(lo_cut.get_mpz_t(), iv.lo.get_mpz_t(), g.get_mpz_t());
    mpz_fdiv_q(hi_cut.get_mpz_t(), iv.hi.get_mpz_t(), g.get_mpz_t());
    if (lo_cut != hi_cut)
        return std::nullopt;

    std::string s = lo_cut.get_str();
    if (s.size() > k)
        throw std::logic_error("constant fractional part not in [0,1)");
    std::vector<digit_t> out(k, 0);
    std::size_t offset = k - s.size();
    for (std::size_t i = 0; i < s.size(); ++i)
        out[offset + i] = static_cast<digit_t>(s[i] - '0');
    return out;
}

} // namespace

std::string ConstantSpec::name() const {
    switch (kind) {
    case Kind::sqrt:
        return "sqrt(" + std::to_string(sqrt_arg) + ")";
    case Kind::e:
        return "e";
    case Kind::pi:
        return "pi";
    }
    return "?";
}

void validate(const ConstantSpec& spec) {
    if (spec.guard_digits < 10)
        throw std::invalid_argument("guard digits must be >= 10");
    if (spec.kind == ConstantSpec::Kind::sqrt) {
        if (spec.sqrt_arg < 2)
            throw std::invalid_argument("sqrt argument must be >= 2");
        Integer mz(static_cast<unsigned long>(spec.sqrt_arg));
        if (mpz_perfect_square_p(mz.get_mpz_t()) != 0)
            throw std::invalid_argument("sqrt(" + std::to_string(spec.sqrt_arg) +
                                        ") is rational (perfect square); not an "
                                        "irrational constant");
    }
}

std::vector<digit_t> constant_fraction_digits(const ConstantSpec& spec, std::size_t count) {
    validate(spec);
    if (count == 0)
        return {};

    unsigned guard = spec.guard_digits;
    for (int attempt = 0; attempt < 24; ++attempt, guard *= 2) {
        std::size_t K = count + guard;
        ScaledInterval iv{0, 0};
        switch (spec.kind) {
        case ConstantSpec::Kind::sqrt:
            iv = scaled_sqrt(spec.sqrt_arg, K);
            break;
        case ConstantSpec::Kind::e:
            iv = scaled_e(K);
            break;
        case ConstantSpec::Kind::pi:
            iv = scaled_pi(K);
            break;
        }
        if (auto digits = leading_digits(iv, K, count))
            return *digits;
        // Bracket straddled a digit boundary: retry with a wider guard band.
    }
    throw error("digit certification did not converge for " + spec.name());
}

namespace {

class ConstantStream final : public DigitStream {
public:
    explicit ConstantStream(const ConstantSpec& spec)
        : DigitStream(Base::of(10), spec.name()), spec_(spec) {
        validate(spec_);
    }

protected:
    void produce(std::vector<std::uint8_t>& buf) override {
        if (served_ == cache_.size()) {
            std::size_t target = std::max<std::size_t>(cache_.size() * 2, 64);
            // Recompute from scratch: certification makes the new block a
            // strict extension of the old one (digits are never revised),
            // and geometric growth keeps recomputation O(1) amortized.
            cache_ = constant_fraction_digits(spec_, target);
        }
        buf.assign(cache_.begin() + static_cast<std::ptrdiff_t>(served_), cache_.end());
        served_ = cache_.size();
    }

private:
    ConstantSpec spec_;
    std::vector<digit_t> cache_;
    std::size_t served_ = 0;
};

} // namespace

std::unique_ptr<DigitStream> constant_digits(const ConstantSpec& spec) {
    return std::make_unique<ConstantStream>(spec);
}

ConstantSpec parse_constant_spec(const std::string& text) {
    ConstantSpec spec;
    if (text == "e") {
        spec.kind = ConstantSpec::Kind::e;
    } else if (text == "pi") {
        spec.kind = ConstantSpec::Kind::pi;
    } else if (text.rfind("sqrt", 0) == 0) {
        spec.kind = ConstantSpec::Kind::sqrt;
        std::string arg = text.substr(4);
        if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')')
            arg = arg.substr(1, arg.size() - 2);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed constant '" + text + "'");
        spec.sqrt_arg = std::stoull(arg);
    } else {
        throw std::invalid_argument("unknown constant '" + text +
                                    "' (expected sqrt(M), e, or pi)");
    }
    validate(spec);
    return spec;
}

} // namespace decav
