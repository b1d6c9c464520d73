#pragma once

#include "resband/polynomial.hpp"
#include "resband/rational.hpp"

#include <string>
#include <vector>

namespace resband {

// Exact element of the cyclotomic field Q(zeta_M), stored as the residue
// modulo Phi_M in the power basis 1, zeta, ..., zeta^(phi(M)-1).
//
// The stored order is the order the value was created at; it is not reduced
// to the smallest possible field. Mixed-order arithmetic lifts both operands
// to the lcm of their orders via zeta_M = zeta_L^(L/M). Reduction mod Phi_M
// keeps every value canonical, so equality at a common order is coefficient
// equality.
class Cyclotomic {
public:
    Cyclotomic() : order_(1) {}  // zero in Q

    static Cyclotomic zero(unsigned order = 1) { return Cyclotomic(order, {}); }
    static Cyclotomic one(unsigned order = 1);
    static Cyclotomic from_rational(const Rational& q, unsigned order = 1);
    // zeta_M^j (j arbitrary, reduced mod M)
    static Cyclotomic root(unsigned M, long j);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    // Only valid when is_rational()
    Rational rational_value() const { return c_.empty() ? Rational(0) : c_[0]; }

    Cyclotomic lifted_to(unsigned L) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    Cyclotomic inverse() const;      // throws invariant_error on zero
    Cyclotomic conjugate() const;    // complex conjugation, zeta -> zeta^(M-1)
    Cyclotomic pow(long e) const;

    std::string str() const;         // human-readable, for diagnostics

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    Cyclotomic(unsigned order, std::vector<Rational> coeffs)
        : order_(order), c_(std::move(coeffs)) { trim(); }

    void trim();
    static Cyclotomic reduce(unsigned order, QPoly p);

    unsigned order_;
    std::vector<Rational> c_;  // length <= phi(order_), trailing zeros trimmed
};

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b);

inline unsigned lcm_order(unsigned a, unsigned b) {
    return a / std::gcd(a, b) * b;
}

} // namespace resband
