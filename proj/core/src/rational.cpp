#include "decav/rational.hpp"

#include <stdexcept>

namespace decav {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

Integer pow10z(unsigned long k) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, k);
    return t;
}

} // namespace

Integer integer_from_u128(u128 v) {
    Integer hi(static_cast<unsigned long>(v >> 64));
    Integer lo(static_cast<unsigned long>(v & 0xffffffffffffffffULL));
    return (hi << 64) + lo;
}

std::string u128_to_string(u128 v) {
    return integer_from_u128(v).get_str();
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::invalid_argument("rational denominator must be nonzero");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
    std::string den = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw std::invalid_argument("malformed rational '" + text + "' (expected p or p/q)");
    return make_rational(Integer(num), Integer(den));
}

std::string rational_to_string(const Rational& value) {
    Rational c = value;
    c.canonicalize();
    return c.get_str();
}

std::string decimal_string(const Rational& value, unsigned sig) {
    if (sig == 0)
        throw std::invalid_argument("significant digit count must be >= 1");
    if (value < 0)
        return "-" + decimal_string(Rational(-value), sig);
    if (value == 0)
        return "0." + std::string(sig, '0');

    Rational v = value;
    v.canonicalize();
    const Integer& p = v.get_num();
    const Integer& q = v.get_den();

    // E = floor(log10(value)). The digit-length difference is within one of
    // it; correct downward from a safe overestimate with exact comparisons.
    long e_guess = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
                   static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
    auto at_least_pow10 = [&](long exp) {
        if (exp >= 0)
            return p >= q * pow10z(static_cast<unsigned long>(exp));
        return p * pow10z(static_cast<unsigned long>(-exp)) >= q;
    };
    long E = e_guess + 2;
    while (!at_least_pow10(E))
        --E;

    // Scale so the first significant digit lands in the 10^(sig-1) place,
    // then round half to even.
    long shift = static_cast<long>(sig) - 1 - E;
    Integer num = p, den = q;
    if (shift >= 0)
        num *= pow10z(static_cast<unsigned long>(shift));
    else
        den *= pow10z(static_cast<unsigned long>(-shift));
    Integer whole, rem;
    mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer twice = rem * 2;
    int cmp = mpz_cmp(twice.get_mpz_t(), den.get_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(whole.get_mpz_t()) != 0))
        whole += 1;
    if (whole >= pow10z(sig)) { // rounding carried into a new digit
        whole /= 10;
        ++E;
    }

    std::string digits = whole.get_str(); // exactly sig digits
    if (E >= 0) {
        std::size_t int_len = static_cast<std::size_t>(E) + 1;
        if (int_len >= digits.size())
            return digits + std::string(int_len - digits.size(), '0');
        return digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
    return "0." + std::string(static_cast<std::size_t>(-E) - 1, '0') + digits;
}

} // namespace decav
