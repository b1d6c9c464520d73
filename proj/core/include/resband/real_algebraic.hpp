#pragma once

#include "resband/cyclotomic.hpp"

#include <utility>

namespace resband {

// A real algebraic number: an element of Q(zeta_M) fixed by complex
// conjugation. This is the coordinate scalar for all geometry. Zero tests
// are exact (canonical form). The sign of a provably nonzero value is
// decided by evaluating sum c_j cos(2 pi j / M) in interval arithmetic at
// increasing precision; termination is guaranteed because a nonzero
// algebraic number is bounded away from zero.
class RealAlgebraic {
public:
    RealAlgebraic() = default;
    RealAlgebraic(const Rational& q) : v_(Cyclotomic::from_rational(q)) {}
    RealAlgebraic(long n) : v_(Cyclotomic::from_rational(Rational(n))) {}
    explicit RealAlgebraic(Cyclotomic v);  // throws invariant_error unless conj-fixed

    static RealAlgebraic zero() { return RealAlgebraic(); }
    // zeta_M^j + zeta_M^-j = 2 cos(2 pi j / M)
    static RealAlgebraic two_cos(unsigned M, long j);

    const Cyclotomic& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_rational() const { return v_.is_rational(); }
    Rational rational_value() const { return v_.rational_value(); }

    int sign() const;
    // Rational interval certified to contain the value; width <= 2^-min_bits roughly.
    std::pair<Rational, Rational> interval(unsigned min_bits = 64) const;

    RealAlgebraic operator-() const;
    RealAlgebraic& operator+=(const RealAlgebraic& r);
    RealAlgebraic& operator-=(const RealAlgebraic& r);
    RealAlgebraic& operator*=(const RealAlgebraic& r);
    RealAlgebraic& operator/=(const RealAlgebraic& r);

    friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return a.v_ == b.v_; }
    friend bool operator!=(const RealAlgebraic& a, const RealAlgebraic& b) { return !(a.v_ == b.v_); }

    std::string str() const { return v_.str(); }

private:
    struct unchecked_tag {};
    RealAlgebraic(Cyclotomic v, unchecked_tag) : v_(std::move(v)) {}

    Cyclotomic v_;
};

RealAlgebraic operator+(RealAlgebraic a, const RealAlgebraic& b);
RealAlgebraic operator-(RealAlgebraic a, const RealAlgebraic& b);
RealAlgebraic operator*(RealAlgebraic a, const RealAlgebraic& b);
RealAlgebraic operator/(RealAlgebraic a, const RealAlgebraic& b);

bool operator<(const RealAlgebraic& a, const RealAlgebraic& b);
bool operator>(const RealAlgebraic& a, const RealAlgebraic& b);
bool operator<=(const RealAlgebraic& a, const RealAlgebraic& b);
bool operator>=(const RealAlgebraic& a, const RealAlgebraic& b);

} // namespace resband
