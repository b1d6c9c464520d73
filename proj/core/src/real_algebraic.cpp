#include "resband/real_algebraic.hpp"

#include "resband/errors.hpp"

#include <gmp.h>
#include <mpfr.h>

namespace resband {

RealAlgebraic::RealAlgebraic(Cyclotomic v) : v_(std::move(v)) {
    if (!(v_.conjugate() == v_))
        throw invariant_error("value is not fixed by complex conjugation: " + v_.str());
}

RealAlgebraic RealAlgebraic::two_cos(unsigned M, long j) {
    Cyclotomic z = Cyclotomic::root(M, j) + Cyclotomic::root(M, -j);
    return RealAlgebraic(std::move(z), unchecked_tag{});
}

RealAlgebraic RealAlgebraic::operator-() const { return RealAlgebraic(-v_, unchecked_tag{}); }

RealAlgebraic& RealAlgebraic::operator+=(const RealAlgebraic& r) { v_ += r.v_; return *this; }
RealAlgebraic& RealAlgebraic::operator-=(const RealAlgebraic& r) { v_ -= r.v_; return *this; }
RealAlgebraic& RealAlgebraic::operator*=(const RealAlgebraic& r) { v_ *= r.v_; return *this; }
RealAlgebraic& RealAlgebraic::operator/=(const RealAlgebraic& r) { v_ /= r.v_; return *this; }

RealAlgebraic operator+(RealAlgebraic a, const RealAlgebraic& b) { a += b; return a; }
RealAlgebraic operator-(RealAlgebraic a, const RealAlgebraic& b) { a -= b; return a; }
RealAlgebraic operator*(RealAlgebraic a, const RealAlgebraic& b) { a *= b; return a; }
RealAlgebraic operator/(RealAlgebraic a, const RealAlgebraic& b) { a /= b; return a; }

bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) { return (a - b).sign() < 0; }
bool operator>(const RealAlgebraic& a, const RealAlgebraic& b) { return (a - b).sign() > 0; }
bool operator<=(const RealAlgebraic& a, const RealAlgebraic& b) { return (a - b).sign() <= 0; }
bool operator>=(const RealAlgebraic& a, const RealAlgebraic& b) { return (a - b).sign() >= 0; }

namespace {

// Encloses sum_j c_j cos(2 pi j / M) in [lo, hi] at the given precision.
// Directed rounding everywhere; cos is handled with a Lipschitz widening
// of one ulp-scale slack instead of tracking its monotonicity.
void enclose(const Cyclotomic& v, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
    mpfr_t pi_lo, pi_hi, t, term_lo, term_hi, c_lo, c_hi, slack;
    mpfr_inits2(prec, pi_lo, pi_hi, t, term_lo, term_hi, c_lo, c_hi, slack, (mpfr_ptr)nullptr);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_set_zero(lo, 0);
    mpfr_set_zero(hi, 0);
    // slack = 2^(-prec+4): generous bound for the angle interval width
    mpfr_set_ui_2exp(slack, 1, -static_cast<long>(prec) + 4, MPFR_RNDU);

    const auto& c = v.coeffs();
    unsigned M = v.order();
    mpq_t q;
    mpq_init(q);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        // theta = 2 pi j / M, evaluated at the midpoint pi and widened by slack
        mpfr_mul_ui(t, pi_lo, 2 * static_cast<unsigned long>(j), MPFR_RNDN);
        mpfr_div_ui(t, t, M, MPFR_RNDN);
        mpfr_cos(c_lo, t, MPFR_RNDD);
        mpfr_cos(c_hi, t, MPFR_RNDU);
        // widen by |theta interval| bound: |pi_hi - pi_lo| * 2j/M + rounding slop <= slack * j
        mpfr_mul_ui(term_lo, slack, static_cast<unsigned long>(j) + 1, MPFR_RNDU);
        mpfr_sub(c_lo, c_lo, term_lo, MPFR_RNDD);
        mpfr_add(c_hi, c_hi, term_lo, MPFR_RNDU);
        // clamp to [-1, 1]
        if (mpfr_cmp_si(c_lo, -1) < 0) mpfr_set_si(c_lo, -1, MPFR_RNDD);
        if (mpfr_cmp_si(c_hi, 1) > 0) mpfr_set_si(c_hi, 1, MPFR_RNDU);

        mpq_set(q, c[j].get_mpq_t());
        int s = mpq_sgn(q);
        // term = c_j * [c_lo, c_hi]
        if (s > 0) {
            mpfr_mul_q(term_lo, c_lo, q, MPFR_RNDD);
            mpfr_mul_q(term_hi, c_hi, q, MPFR_RNDU);
        } else {
            mpfr_mul_q(term_lo, c_hi, q, MPFR_RNDD);
            mpfr_mul_q(term_hi, c_lo, q, MPFR_RNDU);
        }
        mpfr_add(lo, lo, term_lo, MPFR_RNDD);
        mpfr_add(hi, hi, term_hi, MPFR_RNDU);
    }
    mpq_clear(q);
    mpfr_clears(pi_lo, pi_hi, t, term_lo, term_hi, c_lo, c_hi, slack, (mpfr_ptr)nullptr);
}

Rational rational_from_mpfr(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    mpz_class num;
    mpfr_exp_t e = mpfr_get_z_2exp(num.get_mpz_t(), x);
    Rational r(num);
    if (e > 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rational(p);
    } else if (e < 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rational(p);
    }
    r.canonicalize();
    return r;
}

} // namespace

int RealAlgebraic::sign() const {
    if (v_.is_zero()) return 0;
    if (v_.is_rational()) return sgn(v_.rational_value());
    for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
        mpfr_t lo, hi;
        mpfr_inits2(prec, lo, hi, (mpfr_ptr)nullptr);
        enclose(v_, prec, lo, hi);
        int s = 0;
        if (mpfr_sgn(lo) > 0) s = 1;
        else if (mpfr_sgn(hi) < 0) s = -1;
        mpfr_clears(lo, hi, (mpfr_ptr)nullptr);
        if (s != 0) return s;
    }
    throw invariant_error("sign(): interval refinement exhausted for " + v_.str());
}

std::pair<Rational, Rational> RealAlgebraic::interval(unsigned min_bits) const {
    if (v_.is_rational()) {
        Rational q = v_.rational_value();
        return {q, q};
    }
    mpfr_prec_t prec = min_bits < 64 ? 64 : min_bits;
    mpfr_t lo, hi;
    mpfr_inits2(prec + 16, lo, hi, (mpfr_ptr)nullptr);
    enclose(v_, prec + 16, lo, hi);
    auto result = std::make_pair(rational_from_mpfr(lo), rational_from_mpfr(hi));
    mpfr_clears(lo, hi, (mpfr_ptr)nullptr);
    return result;
}

} // namespace resband
