#include "decav/chebyshev.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

#include "decav/primes.hpp"

namespace decav {

ChebyshevCheck chebyshev_check(const Rational& a1, const Rational& a2, std::uint64_t n_max) {
    if (a1 <= 0)
        throw std::invalid_argument("lower constant must be positive");
    if (a1 >= a2)
        throw std::invalid_argument("constants must satisfy a1 < a2");
    if (n_max < 2)
        throw std::invalid_argument("range must reach at least n = 2");

    ChebyshevCheck out{a1, a2, n_max, {}};
    out.a1.canonicalize();
    out.a2.canonicalize();

    const Integer& p1 = out.a1.get_num();
    const Integer& q1 = out.a1.get_den();
    const Integer& p2 = out.a2.get_num();
    const Integer& q2 = out.a2.get_den();

    // 96 bits of working precision: ln n needs ~20 significant bits here;
    // the rest is margin so directed rounding decides every comparison in
    // one pass (a failed certificate is a genuine violation, not noise —
    // the closest near-miss of valid constants over this range is far wider
    // than 2^-90).
    constexpr mpfr_prec_t prec = 96;
    mpfr_t ln_lo, ln_hi, lhs, rhs, tmp;
    mpfr_inits2(prec, ln_lo, ln_hi, lhs, rhs, tmp, static_cast<mpfr_ptr>(nullptr));

    PrimeSieve sieve;
    std::vector<std::uint8_t> flags;
    std::uint64_t pi = 0;
    Integer work;

    for (std::uint64_t lo = 2; lo <= n_max;) {
        std::uint32_t len = static_cast<std::uint32_t>(
            std::min<std::uint64_t>(sieve.segment_size(), n_max - lo + 1));
        sieve.composite_flags(lo, len, flags);

        for (std::uint32_t i = 0; i < len; ++i) {
            std::uint64_t n = lo + i;
            if (!flags[i])
                ++pi; // pi(n) counts n itself

            // ln n bracketed by one directed-rounding log; nextabove turns
            // the lower bound into a certified upper bound (one ulp wider
            // than RNDU at worst).
            mpfr_set_ui(tmp, static_cast<unsigned long>(n), MPFR_RNDN); // exact
            mpfr_log(ln_lo, tmp, MPFR_RNDD);
            mpfr_set(ln_hi, ln_lo, MPFR_RNDN);
            mpfr_nextabove(ln_hi);

            // lower bound a1*n/ln n < pi(n)  <=>  a1_num*n < a1_den*pi*ln n
            work = p1 * static_cast<unsigned long>(n);
            mpfr_set_z(lhs, work.get_mpz_t(), MPFR_RNDU);
            work = q1 * static_cast<unsigned long>(pi);
            mpfr_set_z(rhs, work.get_mpz_t(), MPFR_RNDD);
            mpfr_mul(rhs, rhs, ln_lo, MPFR_RNDD);
            if (mpfr_less_p(lhs, rhs) == 0)
                out.violations.push_back(
                    ChebyshevViolation{n, pi, ChebyshevViolation::Bound::lower});

            // upper bound pi(n) < a2*n/ln n  <=>  a2_den*pi*ln n < a2_num*n
            work = q2 * static_cast<unsigned long>(pi);
            mpfr_set_z(lhs, work.get_mpz_t(), MPFR_RNDU);
            mpfr_mul(lhs, lhs, ln_hi, MPFR_RNDU);
            work = p2 * static_cast<unsigned long>(n);
            mpfr_set_z(rhs, work.get_mpz_t(), MPFR_RNDD);
            if (mpfr_less_p(lhs, rhs) == 0)
                out.violations.push_back(
                    ChebyshevViolation{n, pi, ChebyshevViolation::Bound::upper});
        }
        lo += len;
    }

    mpfr_clears(ln_lo, ln_hi, lhs, rhs, tmp, static_cast<mpfr_ptr>(nullptr));
    return out;
}

} // namespace decav
