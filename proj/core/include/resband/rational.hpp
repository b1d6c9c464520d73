#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace resband {

// Exact rationals, canonical (gcd-reduced, positive denominator) courtesy of GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q" with optional sign. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& q);

} // namespace resband
