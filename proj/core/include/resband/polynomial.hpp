#pragma once

#include "resband/rational.hpp"

#include <vector>

namespace resband {

// Dense univariate polynomials over Q, lowest degree first.
// Only what the cyclotomic machinery needs: no factorization, no gcds
// beyond the extended Euclid used for inverses mod Phi_M.
struct QPoly {
    std::vector<Rational> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly{}; }
    static QPoly constant(const Rational& q);
    static QPoly monomial(std::size_t degree, const Rational& coeff = Rational(1));

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rational& leading() const { return c.back(); }
    void trim();
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
bool operator==(const QPoly& a, const QPoly& b);

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
std::tuple<QPoly, QPoly, QPoly> extended_gcd(const QPoly& a, const QPoly& b);

// M-th cyclotomic polynomial Phi_M (integer coefficients). Memoized.
const QPoly& cyclotomic_polynomial(unsigned M);

// Minimal polynomial of 2*cos(2*pi/M) over Q; degree phi(M)/2 for M > 2.
QPoly cos_minimal_polynomial(unsigned M);

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

} // namespace resband
