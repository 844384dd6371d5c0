#pragma once

// Bi-infinite configurations x : Z -> S, restricted to the eventually
// periodic class: a periodic fill on the far left, a finite core, and a
// periodic fill on the far right.  This class is closed under cellular
// automaton maps and contains every configuration the library manipulates.
//
// Representation:
//   left   tiles (-inf, offset-1], anchored so its last symbol sits at offset-1
//   core   occupies [offset, offset+|core|-1]
//   right  tiles [offset+|core|, +inf), anchored at offset+|core|
//
// Canonical form: fills are primitive (not a power of a shorter word), the
// core cannot be extended into either fill's tiling, and an empty core sits
// at offset 0 whenever the boundary between the two tilings can slide there.
// Canonical forms are unique per point, so equality is structural.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grossca {

using Symbol = int;
using Word = std::vector<Symbol>;

struct Alphabet {
    int size = 2;

    explicit Alphabet(int s) : size(s) {
        if (s < 2) throw std::domain_error("Alphabet: size must be at least 2, got " + std::to_string(s));
    }

    bool contains(Symbol c) const { return c >= 0 && c < size; }

    friend bool operator==(Alphabet, Alphabet) = default;
};

struct Configuration {
    Alphabet alphabet{2};
    Word left;
    Word core;
    std::int64_t offset = 0;
    Word right;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// shortest u with w == u^k; relies on the classical failure-function period
inline std::size_t primitive_period(const Word& w) {
    std::vector<std::size_t> fail(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t j = fail[i - 1];
        while (j > 0 && w[i] != w[j]) j = fail[j - 1];
        if (w[i] == w[j]) ++j;
        fail[i] = j;
    }
    std::size_t p = w.size() - fail.back();
    return w.size() % p == 0 ? p : w.size();
}

inline Word rotated_left(Word w, std::size_t k) {
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k % w.size()), w.end());
    return w;
}

}  // namespace detail

inline void validate(const Configuration& x) {
    if (x.left.empty() || x.right.empty())
        throw std::domain_error("Configuration: fill words must be nonempty");
    auto check = [&](const Word& w, const char* what) {
        for (Symbol c : w)
            if (!x.alphabet.contains(c))
                throw std::domain_error(std::string("Configuration: symbol out of range in ") + what);
    };
    check(x.left, "left fill");
    check(x.core, "core");
    check(x.right, "right fill");
}

// x(i) under the tiling convention; total for every finite index
inline Symbol symbol_at(const Configuration& x, std::int64_t i) {
    const auto core_len = static_cast<std::int64_t>(x.core.size());
    if (i < x.offset) {
        std::int64_t back = x.offset - 1 - i;  // 0 on the last left-fill cell
        auto l = static_cast<std::int64_t>(x.left.size());
        return x.left[static_cast<std::size_t>(l - 1 - detail::floor_mod(back, l))];
    }
    if (i < x.offset + core_len) return x.core[static_cast<std::size_t>(i - x.offset)];
    auto r = static_cast<std::int64_t>(x.right.size());
    return x.right[static_cast<std::size_t>(detail::floor_mod(i - x.offset - core_len, r))];
}

// the restriction x[lo, hi] as a materialized word
inline Word window(const Configuration& x, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::domain_error("window: lo must not exceed hi");
    Word w;
    w.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i) w.push_back(symbol_at(x, i));
    return w;
}

inline Configuration canonicalize(Configuration x) {
    validate(x);

    // primitive fills (anchoring survives: a power collapses to its root)
    std::size_t lp = detail::primitive_period(x.left);
    if (lp < x.left.size()) x.left = Word(x.left.end() - static_cast<std::ptrdiff_t>(lp), x.left.end());
    std::size_t rp = detail::primitive_period(x.right);
    if (rp < x.right.size()) x.right.resize(rp);

    // absorb core symbols that merely continue a fill's tiling
    while (!x.core.empty() && x.core.front() == x.left.front()) {
        x.core.erase(x.core.begin());
        ++x.offset;
        x.left = detail::rotated_left(std::move(x.left), 1);
    }
    while (!x.core.empty() && x.core.back() == x.right.back()) {
        x.core.pop_back();
        std::rotate(x.right.begin(), x.right.end() - 1, x.right.end());
    }

    if (x.core.empty()) {
        // Slide the tiling boundary toward 0 while the neighbouring fill
        // produces the same symbol; it settles at 0 unless the boundary is
        // pinned by a genuine disagreement between the two tilings.
        while (x.offset > 0 && x.left.back() == x.right.back()) {
            std::rotate(x.right.begin(), x.right.end() - 1, x.right.end());
            std::rotate(x.left.begin(), x.left.end() - 1, x.left.end());
            --x.offset;
        }
        while (x.offset < 0 && x.right.front() == x.left.front()) {
            x.left = detail::rotated_left(std::move(x.left), 1);
            x.right = detail::rotated_left(std::move(x.right), 1);
            ++x.offset;
        }
    }
    return x;
}

inline bool is_canonical(const Configuration& x) {
    if (detail::primitive_period(x.left) != x.left.size()) return false;
    if (detail::primitive_period(x.right) != x.right.size()) return false;
    if (!x.core.empty()) {
        if (x.core.front() == x.left.front()) return false;
        if (x.core.back() == x.right.back()) return false;
        return true;
    }
    if (x.offset > 0 && x.left.back() == x.right.back()) return false;
    if (x.offset < 0 && x.right.front() == x.left.front()) return false;
    return true;
}

// pointwise equality of the two bi-infinite sequences
inline bool equals(const Configuration& x, const Configuration& y) {
    if (x.alphabet != y.alphabet) throw std::domain_error("equals: alphabet mismatch");
    return canonicalize(x) == canonicalize(y);
}

// the constant configuration x_a
inline Configuration constant_configuration(Alphabet alphabet, Symbol a) {
    if (!alphabet.contains(a)) throw std::domain_error("constant_configuration: symbol out of range");
    return Configuration{alphabet, {a}, {}, 0, {a}};
}

// ---- text form --------------------------------------------------------------
//
// Grammar (one configuration per line in CLI files, '#' starts a comment):
//   left=<word> core=<word|-> offset=<int> right=<word>
// Words use base-36 digits 0-9a-z, one per symbol; "-" is the empty core.

namespace detail {

inline int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

inline char digit_char(Symbol v) {
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

inline Word parse_word(std::string_view text, Alphabet alphabet, std::string_view field) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        int v = digit_value(c);
        if (v < 0 || !alphabet.contains(v))
            throw std::invalid_argument("configuration: symbol '" + std::string(1, c) + "' out of range in " +
                                        std::string(field) + "=" + std::string(text));
        w.push_back(v);
    }
    return w;
}

}  // namespace detail

inline Configuration parse_configuration(std::string_view text, Alphabet alphabet) {
    auto next_token = [&text]() -> std::string_view {
        while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
        std::size_t end = 0;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
        auto tok = text.substr(0, end);
        text.remove_prefix(end);
        return tok;
    };
    auto expect = [&](std::string_view key) -> std::string_view {
        auto tok = next_token();
        if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
            throw std::invalid_argument("configuration: expected " + std::string(key) + "=<...>, got '" +
                                        std::string(tok) + "'");
        return tok.substr(key.size() + 1);
    };

    Configuration cfg{alphabet, {}, {}, 0, {}};
    cfg.left = detail::parse_word(expect("left"), alphabet, "left");
    auto core = expect("core");
    if (core != "-") cfg.core = detail::parse_word(core, alphabet, "core");
    auto off = expect("offset");
    try {
        std::size_t pos = 0;
        cfg.offset = std::stoll(std::string(off), &pos);
        if (pos != off.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("configuration: bad offset '" + std::string(off) + "'");
    }
    cfg.right = detail::parse_word(expect("right"), alphabet, "right");
    if (!next_token().empty())
        throw std::invalid_argument("configuration: trailing tokens after right=<word>");
    if (cfg.left.empty() || cfg.right.empty())
        throw std::invalid_argument("configuration: fill words must be nonempty");
    return canonicalize(cfg);
}

inline std::string format_configuration(const Configuration& x) {
    auto word_text = [](const Word& w) {
        if (w.empty()) return std::string("-");
        std::string s;
        for (Symbol c : w) s.push_back(detail::digit_char(c));
        return s;
    };
    return "left=" + word_text(x.left) + " core=" + word_text(x.core) +
           " offset=" + std::to_string(x.offset) + " right=" + word_text(x.right);
}

// ---- seeded random configurations -------------------------------------------

namespace detail {

// rejection-sampled uniform draw in [0, n); stable across platforms
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % n;
}

}  // namespace detail

// Deterministic for a fixed seed.  Period lengths are uniform on
// [1, max_period], the core length on [0, max_core], the offset on
// [-(max_core+4), max_core+4], and every symbol uniform on the alphabet.
inline Configuration random_configuration(std::uint64_t seed, Alphabet alphabet,
                                          int max_core, int max_period) {
    if (max_core < 0 || max_period < 1)
        throw std::domain_error("random_configuration: need max_core >= 0 and max_period >= 1");
    std::mt19937_64 rng{seed};
    auto draw_word = [&](std::size_t len) {
        Word w(len);
        for (auto& c : w) c = static_cast<Symbol>(detail::uniform_below(rng, static_cast<std::uint64_t>(alphabet.size)));
        return w;
    };
    Configuration cfg{alphabet, {}, {}, 0, {}};
    cfg.left = draw_word(1 + detail::uniform_below(rng, static_cast<std::uint64_t>(max_period)));
    cfg.core = draw_word(detail::uniform_below(rng, static_cast<std::uint64_t>(max_core) + 1));
    std::int64_t span = 2 * (max_core + 4) + 1;
    cfg.offset = static_cast<std::int64_t>(detail::uniform_below(rng, static_cast<std::uint64_t>(span))) - (max_core + 4);
    cfg.right = draw_word(1 + detail::uniform_below(rng, static_cast<std::uint64_t>(max_period)));
    return canonicalize(cfg);
}

}  // namespace grossca
