#pragma once

// Exact rational arithmetic layer: GMP-backed integers and rationals,
// canonical "p/q" string form, and closed rational intervals for the few
// places where a square root forces directed rounding.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fourfold {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Int& num, const Int& den = Int(1)) {
    if (sgn(den) == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", optional leading '-'. Canonicalizes sign and gcd.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Int floor_rational(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rational(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// floor(sqrt(n)), n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow10(unsigned long digits) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, digits);
    return r;
}

// Exact square root when numerator and denominator of the canonical form are
// both perfect squares; nullopt otherwise (or for negative input).
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    Int num(q.get_num()), den(q.get_den());
    if (!is_square(num) || !is_square(den)) return std::nullopt;
    return rat(isqrt_floor(num), isqrt_floor(den));
}

// Closed interval [lo, hi] with exact rational endpoints. Invariant: lo <= hi.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
    }

    static RationalInterval point(const Rational& v) { return {v, v}; }

    bool is_point() const { return lo == hi; }
    Rational width() const { return Rational(hi - lo); }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }

    RationalInterval scaled(const Rational& c) const {
        if (sgn(c) >= 0) return {Rational(c * lo), Rational(c * hi)};
        return {Rational(c * hi), Rational(c * lo)};
    }

    // Image of [lo,hi] under x -> x^2; collapses to [0, max] when straddling 0.
    RationalInterval squared() const {
        Rational a(lo * lo), b(hi * hi);
        if (sgn(lo) >= 0) return {a, b};
        if (sgn(hi) <= 0) return {b, a};
        return {Rational(0), a > b ? a : b};
    }
};

inline RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {Rational(a.lo + b.lo), Rational(a.hi + b.hi)};
}

inline RationalInterval operator+(const Rational& c, const RationalInterval& x) {
    return {Rational(c + x.lo), Rational(c + x.hi)};
}

inline RationalInterval operator-(const Rational& c, const RationalInterval& x) {
    return {Rational(c - x.hi), Rational(c - x.lo)};
}

// Encloses sqrt(q) for q >= 0. Width at most 10^-digits / den(q); the interval
// degenerates to a point exactly when q is a square of a rational.
inline RationalInterval sqrt_enclosure(const Rational& q, unsigned long digits = 16) {
    if (sgn(q) < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    Int p(q.get_num()), d(q.get_den());
    Int scale = pow10(digits);
    Int radicand = p * d * scale * scale;
    Int s = isqrt_floor(radicand);
    Int denom = d * scale;
    Rational lo = rat(s, denom);
    if (s * s == radicand) return {lo, lo};
    return {lo, rat(Int(s + 1), denom)};
}

}  // namespace fourfold
