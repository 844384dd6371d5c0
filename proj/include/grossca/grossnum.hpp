#pragma once

// Exact arithmetic for grossone-valued quantities.
//
// Two layers:
//   GrossLinear   -- integers linear in the infinite unit: a*(1) + b.
//   GrossQuantity -- finite sums  c * base^(a*(1) + k)  with exact rational
//                    coefficients.  This closed family holds every value the
//                    rest of the library produces: infinitesimal distances,
//                    space and disk cardinalities, geometric tail sums.
//
// The infinite unit (grossone, printed as the circled-one glyph) obeys the
// ordinary rules of arithmetic; the only facts used are that it exceeds every
// finite integer and that base^(-grossone) is a nonzero infinitesimal.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grossca/bigint.hpp"

namespace grossca {

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("GrossLinear: integer overflow in add");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("GrossLinear: integer overflow in sub");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("GrossLinear: integer overflow in mul");
    return r;
}

inline std::int64_t checked_neg(std::int64_t x) { return checked_sub(0, x); }

}  // namespace detail

// a*(1) + b, ordered lexicographically on (a, b): the infinite unit dominates
// every finite integer, so this is the order the values actually have.
struct GrossLinear {
    std::int64_t a = 0;  // coefficient of the infinite unit
    std::int64_t b = 0;  // finite part

    constexpr GrossLinear() = default;
    constexpr GrossLinear(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    static constexpr GrossLinear finite(std::int64_t v) { return {0, v}; }
    static constexpr GrossLinear grossone(std::int64_t coeff = 1) { return {coeff, 0}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_finite() const { return a == 0; }

    friend GrossLinear operator+(GrossLinear x, GrossLinear y) {
        return {detail::checked_add(x.a, y.a), detail::checked_add(x.b, y.b)};
    }
    friend GrossLinear operator-(GrossLinear x, GrossLinear y) {
        return {detail::checked_sub(x.a, y.a), detail::checked_sub(x.b, y.b)};
    }
    friend GrossLinear operator-(GrossLinear x) {
        return {detail::checked_neg(x.a), detail::checked_neg(x.b)};
    }
    friend GrossLinear operator*(std::int64_t s, GrossLinear x) {
        return {detail::checked_mul(s, x.a), detail::checked_mul(s, x.b)};
    }

    GrossLinear& operator+=(GrossLinear o) { return *this = *this + o; }
    GrossLinear& operator-=(GrossLinear o) { return *this = *this - o; }

    friend constexpr bool operator==(GrossLinear, GrossLinear) = default;
    friend constexpr std::strong_ordering operator<=>(GrossLinear x, GrossLinear y) {
        if (x.a != y.a) return x.a <=> y.a;
        return x.b <=> y.b;
    }

    std::string to_string(bool ascii = false) const;
};

namespace detail {

// x^j, saturating just above cap so callers can compare against cap safely
inline __uint128_t pow_capped(std::uint64_t x, int j, std::uint64_t cap) {
    __uint128_t p = 1;
    for (int i = 0; i < j; ++i) {
        p *= x;
        if (p > cap) break;
    }
    return p;
}

// factor base as p^j with j maximal; p is then not a perfect power
inline std::pair<std::int64_t, std::int64_t> smallest_root(std::int64_t base) {
    const auto ubase = static_cast<std::uint64_t>(base);
    for (int j = 62; j >= 2; --j) {
        // floor(base^(1/j)) by binary search, then test exactness
        std::uint64_t lo = 1, hi = ubase;
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo + 1) / 2;
            if (pow_capped(mid, j, ubase) <= ubase) lo = mid; else hi = mid - 1;
        }
        if (lo >= 2 && pow_capped(lo, j, ubase) == ubase)
            return {static_cast<std::int64_t>(lo), j};
    }
    return {base, 1};
}

}  // namespace detail

// One normalized term: coeff * base^exp.  Invariants (enforced by
// GrossQuantity): coeff != 0; base >= 2 and not a perfect power; if
// exp.a == 0 then base == 2 and exp.b == 0 (the pure-rational slot), and
// coeff's numerator and denominator are otherwise coprime to base.
struct GrossTerm {
    BigRational coeff;
    std::int64_t base = 2;
    GrossLinear exp;

    friend bool operator==(const GrossTerm&, const GrossTerm&) = default;
};

class GrossQuantity {
public:
    GrossQuantity() = default;

    GrossQuantity(std::int64_t v) {                    // NOLINT(google-explicit-constructor)
        if (v != 0) terms_.push_back({BigRational{v}, 2, GrossLinear{}});
    }

    GrossQuantity(BigRational v) {                     // NOLINT(google-explicit-constructor)
        if (!v.is_zero()) terms_.push_back({std::move(v), 2, GrossLinear{}});
    }

    static GrossQuantity from_terms(std::vector<GrossTerm> raw) {
        GrossQuantity q;
        q.terms_ = normalize(std::move(raw));
        return q;
    }

    const std::vector<GrossTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // True when the value is an ordinary rational (no infinite unit left).
    bool is_finite_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
    }

    BigRational as_rational() const {
        if (terms_.empty()) return BigRational{};
        if (!is_finite_rational()) throw std::domain_error("GrossQuantity: value is not a finite rational");
        return terms_[0].coeff;
    }

    friend GrossQuantity operator+(const GrossQuantity& x, const GrossQuantity& y) {
        std::vector<GrossTerm> raw = x.terms_;
        raw.insert(raw.end(), y.terms_.begin(), y.terms_.end());
        return from_terms(std::move(raw));
    }

    friend GrossQuantity operator-(const GrossQuantity& x) {
        std::vector<GrossTerm> raw = x.terms_;
        for (auto& t : raw) t.coeff = -t.coeff;
        GrossQuantity q;
        q.terms_ = std::move(raw);  // negation preserves normal form
        return q;
    }

    friend GrossQuantity operator-(const GrossQuantity& x, const GrossQuantity& y) { return x + (-y); }

    friend GrossQuantity operator*(const GrossQuantity& x, const GrossQuantity& y) {
        std::vector<GrossTerm> raw;
        raw.reserve(x.terms_.size() * y.terms_.size());
        for (const auto& s : x.terms_)
            for (const auto& t : y.terms_) raw.push_back(mul_terms(s, t));
        return from_terms(std::move(raw));
    }

    GrossQuantity& operator+=(const GrossQuantity& o) { return *this = *this + o; }
    GrossQuantity& operator-=(const GrossQuantity& o) { return *this = *this - o; }
    GrossQuantity& operator*=(const GrossQuantity& o) { return *this = *this * o; }

    friend bool operator==(const GrossQuantity& x, const GrossQuantity& y) { return x.terms_ == y.terms_; }

    // Total order: the sign of x - y is the sign of the dominant (largest
    // scale) term of the normalized difference.  Agrees with substituting any
    // sufficiently large finite integer for the infinite unit.
    friend std::strong_ordering operator<=>(const GrossQuantity& x, const GrossQuantity& y) {
        GrossQuantity d = x - y;
        if (d.terms_.empty()) return std::strong_ordering::equal;
        return d.terms_.front().coeff.sign() <=> 0;
    }

    std::string to_string(bool ascii = false) const;

private:
    // Terms in strictly descending scale order, where the scale of a term is
    // base^(exp.a) compared as an exact rational.  Distinct normalized terms
    // always have distinct scales, so a quantity's leading term dominates all
    // later ones once the infinite unit is large enough.
    std::vector<GrossTerm> terms_;

    // exact comparison of base1^a1 and base2^a2 as positive rationals
    static std::strong_ordering cmp_scale(std::int64_t b1, std::int64_t a1, std::int64_t b2, std::int64_t a2) {
        auto side = [](std::int64_t a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); };
        if (side(a1) != side(a2)) return side(a1) <=> side(a2);
        if (a1 == 0) return std::strong_ordering::equal;
        std::uint64_t e1 = static_cast<std::uint64_t>(a1 > 0 ? a1 : -a1);
        std::uint64_t e2 = static_cast<std::uint64_t>(a2 > 0 ? a2 : -a2);
        BigInt p1 = BigInt::pow(BigInt{b1}, e1);
        BigInt p2 = BigInt::pow(BigInt{b2}, e2);
        return a1 > 0 ? p1 <=> p2 : p2 <=> p1;
    }

    static GrossTerm mul_terms(const GrossTerm& s, const GrossTerm& t) {
        if (s.exp.is_zero()) return {s.coeff * t.coeff, t.base, t.exp};
        if (t.exp.is_zero()) return {s.coeff * t.coeff, s.base, s.exp};
        if (s.base != t.base)
            throw std::domain_error("GrossQuantity: unsupported product of powers with different bases (" +
                                    std::to_string(s.base) + " and " + std::to_string(t.base) + ")");
        return {s.coeff * t.coeff, s.base, s.exp + t.exp};
    }

    static std::vector<GrossTerm> normalize(std::vector<GrossTerm> raw);
};

// 1 * base^exp as a normalized quantity; perfect-power bases are reduced
// (4^e becomes 2^(2e)) and a zero grossone part collapses to a rational.
inline GrossQuantity pow_quantity(std::int64_t base, GrossLinear exp) {
    if (base < 2) throw std::domain_error("pow_quantity: base must be at least 2, got " + std::to_string(base));
    return GrossQuantity::from_terms({{BigRational{1}, base, exp}});
}

// Exact geometric tail sum  base^-1 + base^-2 + ... + base^-k
// = (1 - base^-k) / (base - 1), valid for finite and grossone-valued k >= 1.
inline GrossQuantity geometric_sum(std::int64_t base, GrossLinear k) {
    if (base < 2) throw std::domain_error("geometric_sum: base must be at least 2, got " + std::to_string(base));
    if (k < GrossLinear::finite(1)) throw std::domain_error("geometric_sum: upper bound must be at least 1");
    BigRational scale{1, base - 1};
    return GrossQuantity{scale} - GrossQuantity{scale} * pow_quantity(base, -k);
}

inline std::vector<GrossTerm> GrossQuantity::normalize(std::vector<GrossTerm> raw) {
    // Accumulate per scale class (base, exp.a): value = R * base^(a*(1)),
    // with R the exact rational  sum of coeff * base^(exp.b).
    BigRational finite_part;
    std::map<std::pair<std::int64_t, std::int64_t>, BigRational> classes;
    for (auto& t : raw) {
        if (t.coeff.is_zero()) continue;
        if (t.base < 2 || t.base > INT32_MAX) throw std::domain_error("GrossQuantity: term base out of range");
        auto [root, power] = detail::smallest_root(t.base);
        GrossLinear exp = power == 1 ? t.exp : power * t.exp;
        BigRational value = t.coeff * BigRational::pow(BigInt{root}, exp.b);
        if (exp.a == 0) {
            finite_part += value;
        } else {
            classes[{root, exp.a}] += value;
        }
    }

    std::vector<GrossTerm> out;
    for (auto& [key, r] : classes) {
        if (r.is_zero()) continue;
        auto [base, a] = key;
        // move the base-adic content of the coefficient into the exponent
        std::int64_t k = r.valuation(static_cast<std::uint32_t>(base));
        BigRational coeff = r * BigRational::pow(BigInt{base}, -k);
        out.push_back({std::move(coeff), base, GrossLinear{a, k}});
    }
    if (!finite_part.is_zero()) out.push_back({std::move(finite_part), 2, GrossLinear{}});

    std::sort(out.begin(), out.end(), [](const GrossTerm& s, const GrossTerm& t) {
        auto c = cmp_scale(s.base, s.exp.a, t.base, t.exp.a);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
        // distinct normalized terms never tie on scale; keep the comparator
        // total anyway: finite exponent part, then base
        if (s.exp.b != t.exp.b) return s.exp.b > t.exp.b;
        return s.base > t.base;
    });
    return out;
}

// ---- formatting ------------------------------------------------------------
//
// Stable output grammar (consumed by the CLI):
//   quantity := "0" | term (" + " | " - ") term ...
//   term     := rational | [rational "·"] base "^" exponent
//   exponent := grossone-bare | "(" linear ")" | "-(" linear ")"
// The infinite unit prints as the circled-one glyph, or "G" in ascii mode
// (ascii mode also uses "*" for the product dot and always parenthesizes
// the exponent).

namespace detail {

inline std::string grossone_glyph(bool ascii) { return ascii ? "G" : "①"; }

// renders a*(1)+b, for a >= 0 contexts (negative exponents are wrapped
// by the caller as -( ... ))
inline std::string linear_body(GrossLinear e, bool ascii) {
    std::string s;
    if (e.a != 0) {
        if (e.a != 1) s += std::to_string(e.a);
        s += grossone_glyph(ascii);
        if (e.b > 0) s += "+" + std::to_string(e.b);
        if (e.b < 0) s += "-" + std::to_string(-e.b);
    } else {
        s += std::to_string(e.b);
    }
    return s;
}

}  // namespace detail

inline std::string GrossLinear::to_string(bool ascii) const {
    if (*this < GrossLinear{}) return "-(" + detail::linear_body(-*this, ascii) + ")";
    return detail::linear_body(*this, ascii);
}

inline std::string GrossQuantity::to_string(bool ascii) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        bool negative = t.coeff.sign() < 0;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        BigRational mag = t.coeff.abs();
        if (t.exp.is_zero()) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) out += mag.to_string() + (ascii ? "*" : "·");
        out += std::to_string(t.base);
        if (t.exp < GrossLinear{}) {
            out += "^-(" + detail::linear_body(-t.exp, ascii) + ")";
        } else if (t.exp == GrossLinear::grossone() && !ascii) {
            out += "^" + detail::grossone_glyph(false);
        } else {
            out += "^(" + detail::linear_body(t.exp, ascii) + ")";
        }
    }
    return out;
}

}  // namespace grossca
