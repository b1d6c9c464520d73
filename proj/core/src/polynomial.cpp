#include "resband/polynomial.hpp"

#include "resband/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace resband {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(text, 10);
            return Rational(n);
        }
        std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty() || ds.find('/') != std::string::npos) return std::nullopt;
        Integer n(ns, 10), d(ds, 10);
        if (d == 0) return std::nullopt;
        Rational q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

QPoly QPoly::constant(const Rational& q) {
    QPoly p;
    if (q != 0) p.c = {q};
    return p;
}

QPoly QPoly::monomial(std::size_t degree, const Rational& coeff) {
    QPoly p;
    if (coeff != 0) {
        p.c.assign(degree + 1, Rational(0));
        p.c[degree] = coeff;
    }
    return p;
}

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly::zero();
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw invariant_error("polynomial division by zero");
    QPoly r = a, q;
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational f = r.leading() / b.leading();
        int shift = r.degree() - b.degree();
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

std::tuple<QPoly, QPoly, QPoly> extended_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1 = QPoly::zero();
    QPoly t0 = QPoly::zero(), t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero() && r0.leading() != 1) {
        Rational inv = 1 / r0.leading();
        QPoly k = QPoly::constant(inv);
        r0 = r0 * k; s0 = s0 * k; t0 = t0 * k;
    }
    return {r0, s0, t0};
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

const QPoly& cyclotomic_polynomial(unsigned M) {
    if (M == 0) throw invariant_error("cyclotomic order must be positive");
    static std::map<unsigned, QPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    // Phi_d for divisors d of M in increasing order: x^d - 1 over the smaller Phi_e.
    for (unsigned d : divisors(M)) {
        if (cache.count(d)) continue;
        QPoly p = QPoly::monomial(d) - QPoly::constant(1);
        for (unsigned e : divisors(d)) {
            if (e == d) continue;
            auto [quot, rem] = divmod(p, cache.at(e));
            if (!rem.is_zero()) throw invariant_error("cyclotomic polynomial division not exact");
            p = quot;
        }
        cache.emplace(d, std::move(p));
    }
    return cache.at(M);
}

QPoly cos_minimal_polynomial(unsigned M) {
    if (M == 1) return QPoly(std::vector<Rational>{Rational(-2), Rational(1)});  // t - 2
    if (M == 2) return QPoly(std::vector<Rational>{Rational(2), Rational(1)});   // t + 2
    // Phi_M is palindromic of even degree 2d; Phi_M(x)/x^d = a_d + sum a_{d+k} (x^k + x^-k)
    // and u_k = x^k + x^-k satisfies u_k = t u_{k-1} - u_{k-2} with t = x + 1/x.
    const QPoly& phi = cyclotomic_polynomial(M);
    int d = phi.degree() / 2;
    QPoly u_prev = QPoly::constant(2);                 // u_0
    QPoly u_cur = QPoly::monomial(1);                  // u_1 = t
    QPoly result = QPoly::constant(phi.c[d]);
    for (int k = 1; k <= d; ++k) {
        result = result + QPoly::constant(phi.c[d + k]) * u_cur;
        QPoly u_next = QPoly::monomial(1) * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
    }
    return result;
}

} // namespace resband
