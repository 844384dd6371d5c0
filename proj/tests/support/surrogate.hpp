#pragma once

// Finite-surrogate oracle: evaluate a quantity with the infinite unit
// replaced by a concrete integer K, in exact rational arithmetic.  This is an
// independent route from the library's dominant-term comparison and is used
// to cross-check orderings and identities.

#include <cstdint>

#include "grossca/grossnum.hpp"

namespace grossca::testing {

inline BigRational eval_at(const GrossQuantity& q, std::int64_t k) {
    BigRational total;
    for (const auto& t : q.terms()) {
        std::int64_t e = t.exp.a * k + t.exp.b;  // test-scale magnitudes only
        total += t.coeff * BigRational::pow(BigInt{t.base}, e);
    }
    return total;
}

// Smallest K0 such that for every K >= K0 the leading normalized term of q
// outweighs the sum of all later ones, so sign(eval_at(q, K)) is stable.
inline std::int64_t dominance_threshold(const GrossQuantity& q) {
    const auto& ts = q.terms();
    if (ts.size() <= 1) return 1;
    auto scale = [](const GrossTerm& t) { return BigRational::pow(BigInt{t.base}, t.exp.a); };
    auto class_coeff = [](const GrossTerm& t) {
        return (t.coeff * BigRational::pow(BigInt{t.base}, t.exp.b)).abs();
    };
    BigRational ratio = scale(ts[0]) / scale(ts[1]);  // > 1 by normal form
    BigRational rest;
    for (std::size_t i = 1; i < ts.size(); ++i) rest += class_coeff(ts[i]);
    BigRational lead = class_coeff(ts[0]);
    std::int64_t k = 1;
    lead *= ratio;
    while (lead <= rest) {
        lead *= ratio;
        ++k;
        if (k > 100000) throw std::logic_error("dominance_threshold: runaway search");
    }
    return k;
}

}  // namespace grossca::testing
