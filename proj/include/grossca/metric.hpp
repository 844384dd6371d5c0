#pragma once

// The meet of two configurations -- the maximal stretch around index 0 on
// which they agree, with endpoints that may reach plus or minus grossone --
// the evaluation function F mapping meets into (0,1], and the resulting
// nonarchimedean metric  d(x,y) = F(x ^ y)  (0 when x = y).
//
// Two companion metrics are provided for comparison: the classical
// symmetric-window metric 2^-inf{|i| : x(i) != y(i)}, and the summed metric
// sum |x(i)-y(i)| / 2^|i| over [-grossone, grossone], evaluated exactly.

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "grossca/config.hpp"
#include "grossca/grossnum.hpp"

namespace grossca {

// A finite integer or one of the two infinite endpoints.  Interval endpoints
// never exceed grossone in absolute value.
struct ExtendedIndex {
    enum class Kind { minus_grossone, finite, plus_grossone };

    Kind kind = Kind::finite;
    std::int64_t value = 0;  // meaningful only when finite

    static ExtendedIndex finite(std::int64_t v) { return {Kind::finite, v}; }
    static ExtendedIndex minus_grossone() { return {Kind::minus_grossone, 0}; }
    static ExtendedIndex plus_grossone() { return {Kind::plus_grossone, 0}; }

    bool is_finite() const { return kind == Kind::finite; }

    GrossLinear to_gross_linear() const {
        switch (kind) {
            case Kind::minus_grossone: return GrossLinear{-1, 0};
            case Kind::plus_grossone: return GrossLinear{1, 0};
            default: return GrossLinear::finite(value);
        }
    }

    std::string to_string(bool ascii = false) const { return to_gross_linear().to_string(ascii); }

    friend bool operator==(const ExtendedIndex&, const ExtendedIndex&) = default;
    friend std::strong_ordering operator<=>(const ExtendedIndex& a, const ExtendedIndex& b) {
        return a.to_gross_linear() <=> b.to_gross_linear();
    }
};

// x ^ y.  Either the two points are identical, or they already differ at 0
// (the bottom element), or they agree exactly on [lo, hi] around 0.
struct Meet {
    enum class Kind { identical, star, agreement };

    Kind kind = Kind::identical;
    ExtendedIndex lo;               // <= 0; agreement only
    ExtendedIndex hi;               // >= 0; agreement only
    std::optional<Word> witness;    // the agreed word when both endpoints are finite

    static Meet identical() { return {Kind::identical, {}, {}, std::nullopt}; }
    static Meet star() { return {Kind::star, {}, {}, std::nullopt}; }
    static Meet agreement(ExtendedIndex lo, ExtendedIndex hi, std::optional<Word> witness = std::nullopt) {
        return {Kind::agreement, lo, hi, std::move(witness)};
    }

    friend bool operator==(const Meet&, const Meet&) = default;
};

namespace detail {

// Fills are compared beyond this bound purely through their periods: one
// whole lcm window past every core decides tail agreement.
inline std::int64_t right_scan_bound(const Configuration& x, const Configuration& y) {
    std::int64_t start = std::max(x.offset + static_cast<std::int64_t>(x.core.size()),
                                  y.offset + static_cast<std::int64_t>(y.core.size()));
    auto period = std::lcm(static_cast<std::int64_t>(x.right.size()), static_cast<std::int64_t>(y.right.size()));
    return std::max(start, std::int64_t{0}) + period;
}

inline std::int64_t left_scan_bound(const Configuration& x, const Configuration& y) {
    std::int64_t start = std::min(x.offset, y.offset);
    auto period = std::lcm(static_cast<std::int64_t>(x.left.size()), static_cast<std::int64_t>(y.left.size()));
    return std::min(start, std::int64_t{0}) - period;
}

}  // namespace detail

// The maximal agreement interval around 0 (Identical / Star for the
// degenerate cases).  Tail agreement is decided exactly from the periodic
// fills, so endpoints reach +/-grossone whenever the sequences coincide on
// an entire side.
inline Meet agreement_interval(const Configuration& x, const Configuration& y) {
    if (x.alphabet != y.alphabet) throw std::domain_error("agreement_interval: alphabet mismatch");
    if (equals(x, y)) return Meet::identical();
    if (symbol_at(x, 0) != symbol_at(y, 0)) return Meet::star();

    std::int64_t right_bound = detail::right_scan_bound(x, y);
    ExtendedIndex hi = ExtendedIndex::plus_grossone();
    for (std::int64_t i = 1; i <= right_bound; ++i) {
        if (symbol_at(x, i) != symbol_at(y, i)) {
            hi = ExtendedIndex::finite(i - 1);
            break;
        }
    }

    std::int64_t left_bound = detail::left_scan_bound(x, y);
    ExtendedIndex lo = ExtendedIndex::minus_grossone();
    for (std::int64_t i = -1; i >= left_bound; --i) {
        if (symbol_at(x, i) != symbol_at(y, i)) {
            lo = ExtendedIndex::finite(i + 1);
            break;
        }
    }

    assert(lo.is_finite() || hi.is_finite());  // otherwise the points were equal
    std::optional<Word> witness;
    if (lo.is_finite() && hi.is_finite()) witness = window(x, lo.value, hi.value);
    return Meet::agreement(lo, hi, std::move(witness));
}

// F: star evaluates to 1, an agreement on [m, n] to 2^-(n+1-m).  Monotone
// decreasing in the interval, so larger agreement means smaller distance.
inline GrossQuantity evaluate_meet(const Meet& meet) {
    switch (meet.kind) {
        case Meet::Kind::star: return GrossQuantity{1};
        case Meet::Kind::agreement: {
            GrossLinear n = meet.hi.to_gross_linear();
            GrossLinear m = meet.lo.to_gross_linear();
            assert(!(m == GrossLinear{-1, 0} && n == GrossLinear{1, 0}));
            return pow_quantity(2, -(n + GrossLinear::finite(1) - m));
        }
        default:
            throw std::logic_error("evaluate_meet: meet of identical points has no F value");
    }
}

// the grossone ultrametric; exact values in {0} union (0, 1]
inline GrossQuantity distance(const Configuration& x, const Configuration& y) {
    if (x.alphabet != y.alphabet) throw std::domain_error("distance: alphabet mismatch");
    if (equals(x, y)) return GrossQuantity{};
    return evaluate_meet(agreement_interval(x, y));
}

// 2^-n with n the smallest |i| where the sequences differ; 0 for equal inputs
inline GrossQuantity classical_distance(const Configuration& x, const Configuration& y) {
    if (x.alphabet != y.alphabet) throw std::domain_error("classical_distance: alphabet mismatch");
    if (equals(x, y)) return GrossQuantity{};
    std::int64_t radius = std::max(detail::right_scan_bound(x, y), -detail::left_scan_bound(x, y));
    for (std::int64_t n = 0; n <= radius; ++n) {
        if (symbol_at(x, n) != symbol_at(y, n) || symbol_at(x, -n) != symbol_at(y, -n))
            return pow_quantity(2, GrossLinear::finite(-n));
    }
    throw std::logic_error("classical_distance: unequal points with no disagreement in scan radius");
}

namespace detail {

// Sum of 2^-i over i = start, start+period, ... up to grossone, exact.
// Uses the divisibility of the infinite unit by every finite integer, so the
// last index is grossone - ((-start) mod period).
inline GrossQuantity tail_sum(std::int64_t start, std::int64_t period) {
    assert(start >= 0 && period >= 1);
    std::int64_t r = floor_mod(-start, period);
    GrossQuantity head{BigRational::pow(BigInt{2}, -start)};
    GrossQuantity closing = GrossQuantity{1} - pow_quantity(2, GrossLinear{-1, start + r - period});
    BigInt two_p = BigInt::pow(BigInt{2}, static_cast<std::uint64_t>(period));
    return head * closing * GrossQuantity{BigRational{two_p, two_p - BigInt{1}}};
}

}  // namespace detail

// sum over [-grossone, grossone] of |x(i)-y(i)| / 2^|i|, computed exactly as
// a finite middle sum plus two periodic geometric tails
inline GrossQuantity summed_distance(const Configuration& x, const Configuration& y) {
    if (x.alphabet != y.alphabet) throw std::domain_error("summed_distance: alphabet mismatch");
    if (x.alphabet.size != 2) throw std::domain_error("summed_distance: only alphabet size 2 is supported");

    auto differ = [&](std::int64_t i) { return symbol_at(x, i) != symbol_at(y, i); };

    std::int64_t core_lo = std::min(x.offset, y.offset);
    std::int64_t core_hi = std::max(x.offset + static_cast<std::int64_t>(x.core.size()),
                                    y.offset + static_cast<std::int64_t>(y.core.size()));
    auto left_period = std::lcm(static_cast<std::int64_t>(x.left.size()), static_cast<std::int64_t>(y.left.size()));
    auto right_period = std::lcm(static_cast<std::int64_t>(x.right.size()), static_cast<std::int64_t>(y.right.size()));
    std::int64_t left_tail_end = std::min(core_lo - 1, std::int64_t{-1});   // tail covers (-inf, here]
    std::int64_t right_tail_start = std::max(core_hi, std::int64_t{0});     // tail covers [here, +inf)

    GrossQuantity total;
    BigRational middle;
    for (std::int64_t i = left_tail_end + 1; i < right_tail_start; ++i)
        if (differ(i)) middle += BigRational::pow(BigInt{2}, -(i < 0 ? -i : i));
    total += GrossQuantity{middle};

    for (std::int64_t p = 0; p < right_period; ++p)
        if (differ(right_tail_start + p)) total += detail::tail_sum(right_tail_start + p, right_period);
    for (std::int64_t p = 0; p < left_period; ++p)
        if (differ(left_tail_end - p)) total += detail::tail_sum(-(left_tail_end - p), left_period);

    return total;
}

}  // namespace grossca
