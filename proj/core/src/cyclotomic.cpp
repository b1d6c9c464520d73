#include "resband/cyclotomic.hpp"

#include "resband/errors.hpp"

#include <sstream>

namespace resband {

void Cyclotomic::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Cyclotomic Cyclotomic::one(unsigned order) {
    return Cyclotomic(order, {Rational(1)});
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, unsigned order) {
    if (q == 0) return zero(order);
    return Cyclotomic(order, {q});
}

Cyclotomic Cyclotomic::reduce(unsigned order, QPoly p) {
    if (p.degree() >= static_cast<int>(euler_phi(order))) {
        p = divmod(p, cyclotomic_polynomial(order)).second;
    }
    return Cyclotomic(order, std::move(p.c));
}

Cyclotomic Cyclotomic::root(unsigned M, long j) {
    if (M == 0) throw invariant_error("root order must be positive");
    long r = j % static_cast<long>(M);
    if (r < 0) r += M;
    return reduce(M, QPoly::monomial(static_cast<std::size_t>(r)));
}

Cyclotomic Cyclotomic::lifted_to(unsigned L) const {
    if (L == order_) return *this;
    if (L % order_ != 0) throw invariant_error("cannot lift to a non-multiple order");
    unsigned k = L / order_;
    QPoly p;
    if (!c_.empty()) {
        p.c.assign((c_.size() - 1) * k + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) p.c[i * k] = c_[i];
        p.trim();
    }
    return reduce(L, std::move(p));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    unsigned L = lcm_order(order_, rhs.order_);
    Cyclotomic a = lifted_to(L), b = rhs.lifted_to(L);
    if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), Rational(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.trim();
    *this = std::move(a);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    unsigned L = lcm_order(order_, rhs.order_);
    Cyclotomic a = lifted_to(L), b = rhs.lifted_to(L);
    if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), Rational(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] -= b.c_[i];
    a.trim();
    *this = std::move(a);
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    unsigned L = lcm_order(order_, rhs.order_);
    Cyclotomic a = lifted_to(L), b = rhs.lifted_to(L);
    if (a.is_zero() || b.is_zero()) {
        *this = zero(L);
        return *this;
    }
    // fast path: rational scaling
    if (b.is_rational()) {
        for (auto& x : a.c_) x *= b.c_[0];
        *this = std::move(a);
        return *this;
    }
    if (a.is_rational()) {
        Cyclotomic r = b;
        for (auto& x : r.c_) x *= a.c_[0];
        *this = std::move(r);
        return *this;
    }
    QPoly pa{std::move(a.c_)}, pb{std::move(b.c_)};
    *this = reduce(L, pa * pb);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw invariant_error("division by zero in Q(zeta)");
    if (is_rational()) return from_rational(1 / c_[0], order_);
    QPoly value{c_};
    auto [g, s, t] = extended_gcd(value, cyclotomic_polynomial(order_));
    (void)t;
    if (g.degree() != 0) throw invariant_error("Phi_M not coprime to nonzero residue");
    // g is monic constant 1, so s * value = 1 mod Phi_M
    return reduce(order_, s);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
    unsigned L = lcm_order(order_, rhs.order_);
    *this = lifted_to(L) * rhs.lifted_to(L).inverse();
    return *this;
}

Cyclotomic Cyclotomic::conjugate() const {
    // zeta^i -> zeta^(M-i): substitute and reduce
    QPoly p;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::size_t e = i == 0 ? 0 : order_ - i;
        if (p.c.size() <= e) p.c.resize(e + 1, Rational(0));
        p.c[e] += c_[i];
    }
    p.trim();
    return reduce(order_, std::move(p));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this, acc = one(order_);
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    unsigned L = lcm_order(a.order_, b.order_);
    return a.lifted_to(L).c_ == b.lifted_to(L).c_;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) os << "-";
        Rational a = abs(c_[i]);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { a += b; return a; }
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { a -= b; return a; }
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { a *= b; return a; }
Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { a /= b; return a; }

} // namespace resband
