#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>

#include "grossca/config.hpp"

using namespace grossca;

namespace {

const Alphabet kBinary{2};

// an equal-valued but differently presented copy: doubled fills, a core
// widened by `grow` cells on each side
Configuration represent(const Configuration& x, std::int64_t grow) {
    auto core_end = x.offset + static_cast<std::int64_t>(x.core.size());
    auto l = static_cast<std::int64_t>(x.left.size());
    auto r = static_cast<std::int64_t>(x.right.size());
    Configuration y{x.alphabet, {}, {}, x.offset - grow, {}};
    y.core = window(x, x.offset - grow, core_end + grow - 1);
    y.left = window(x, x.offset - grow - 2 * l, x.offset - grow - 1);
    y.right = window(x, core_end + grow, core_end + grow + 2 * r - 1);
    return y;
}

}  // namespace

TEST_CASE("parse: constant, worked pair, pure periodic") {
    Configuration ones = parse_configuration("left=1 core=- offset=0 right=1", kBinary);
    CHECK(equals(ones, constant_configuration(kBinary, 1)));
    for (std::int64_t i : {-5, 0, 3}) CHECK(symbol_at(ones, i) == 1);

    Configuration y = parse_configuration("left=0 core=111 offset=-2 right=1", kBinary);
    CHECK(symbol_at(y, -3) == 0);
    CHECK(symbol_at(y, -2) == 1);
    CHECK(symbol_at(y, 0) == 1);
    CHECK(symbol_at(y, 7) == 1);

    Configuration alt = parse_configuration("left=10 core=- offset=0 right=10", kBinary);
    for (std::int64_t i = -9; i <= 9; ++i) CHECK(symbol_at(alt, i) == (i % 2 == 0 ? 1 : 0));
}

TEST_CASE("parse: diagnostics name the offending token") {
    CHECK_THROWS_AS(parse_configuration("left=2 core=- offset=0 right=1", kBinary), std::invalid_argument);
    CHECK_THROWS_AS(parse_configuration("left=1 offset=0 right=1", kBinary), std::invalid_argument);
    CHECK_THROWS_AS(parse_configuration("left=1 core=- offset=zz right=1", kBinary), std::invalid_argument);
    CHECK_THROWS_AS(parse_configuration("left= core=- offset=0 right=1", kBinary), std::invalid_argument);
    CHECK_THROWS_AS(parse_configuration("left=1 core=- offset=0 right=1 junk=2", kBinary), std::invalid_argument);
    CHECK_THROWS_WITH(parse_configuration("left=1 core=31 offset=0 right=1", kBinary),
                      Catch::Matchers::ContainsSubstring("'3'"));
}

TEST_CASE("canonicalize: primitive fills and core absorption") {
    Configuration a{kBinary, {1, 0, 1, 0}, {1, 1}, 0, {1}};
    Configuration ca = canonicalize(a);
    CHECK(ca.left == Word{1, 0});

    // core made of fill symbols collapses to the constant configuration
    Configuration b{kBinary, {1}, {1, 1}, -1, {1}};
    Configuration cb = canonicalize(b);
    CHECK(cb == constant_configuration(kBinary, 1));
    CHECK(cb.core.empty());
    CHECK(cb.offset == 0);
}

TEST_CASE("canonicalize: empty-core boundary slides to 0 when possible") {
    Configuration glued{kBinary, {1, 0}, {}, 4, {1, 0}};  // fully 2-periodic
    Configuration c = canonicalize(glued);
    CHECK(c.offset == 0);
    for (std::int64_t i = -6; i <= 6; ++i) CHECK(symbol_at(c, i) == symbol_at(glued, i));

    // a genuine step from 0s to 1s at position 5 keeps its pinned boundary
    Configuration step{kBinary, {0}, {}, 5, {1}};
    Configuration cs = canonicalize(step);
    CHECK(cs.offset == 5);
    CHECK(cs.core.empty());
    CHECK(symbol_at(cs, 4) == 0);
    CHECK(symbol_at(cs, 5) == 1);
}

TEST_CASE("canonicalize: idempotent and pointwise-invariant on random configurations") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Configuration x = random_configuration(seed, kBinary, 8, 4);
        Configuration once = canonicalize(x);
        CHECK(canonicalize(once) == once);
        bool same = true;
        for (std::int64_t i = -64; i <= 64; ++i)
            same = same && symbol_at(once, i) == symbol_at(x, i);
        CHECK(same);
    }
}

TEST_CASE("equals: reflexive, distinguishes constants, presentation-blind") {
    Configuration x0 = constant_configuration(kBinary, 0);
    Configuration x1 = constant_configuration(kBinary, 1);
    CHECK(equals(x0, x0));
    CHECK_FALSE(equals(x0, x1));

    std::mt19937_64 rng{11};
    for (std::uint64_t seed = 100; seed < 300; ++seed) {
        Configuration x = random_configuration(seed, kBinary, 6, 4);
        Configuration y = represent(x, 1 + static_cast<std::int64_t>(rng() % 5));
        CHECK(equals(x, y));
        CHECK(canonicalize(y) == canonicalize(x));
    }

    Alphabet three{3};
    CHECK_THROWS_AS(equals(x0, constant_configuration(three, 0)), std::domain_error);
}

TEST_CASE("equals agrees with the finite-window reduction") {
    // window wide enough per the eventual-periodicity argument, and a 4x
    // wider one as the brute-force referee
    auto agree_on = [](const Configuration& x, const Configuration& y, std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i <= hi; ++i)
            if (symbol_at(x, i) != symbol_at(y, i)) return false;
        return true;
    };
    std::mt19937_64 rng{12345};
    for (int trial = 0; trial < 400; ++trial) {
        Configuration x = random_configuration(2000 + 2 * trial, kBinary, 5, 4);
        Configuration y;
        if (trial % 3 == 0) {
            y = represent(x, 2);  // equal pair
        } else if (trial % 3 == 1) {
            y = represent(x, 2);  // equal except one flipped core cell
            std::int64_t flip = static_cast<std::int64_t>(rng() % 7) - 3;
            Word w = window(y, std::min(y.offset, flip), std::max(y.offset + static_cast<std::int64_t>(y.core.size()), flip + 1) - 1);
            std::int64_t lo = std::min(y.offset, flip);
            w[static_cast<std::size_t>(flip - lo)] ^= 1;
            y = Configuration{y.alphabet, y.left, w, lo, y.right};
        } else {
            y = random_configuration(2001 + 2 * trial, kBinary, 5, 4);
        }
        std::int64_t periods = std::lcm(std::lcm(x.left.size(), x.right.size()),
                                        std::lcm(y.left.size(), y.right.size()));
        std::int64_t cores = static_cast<std::int64_t>(x.core.size() + y.core.size());
        std::int64_t lo = std::min({x.offset, y.offset, std::int64_t{0}}) - periods - cores;
        std::int64_t hi = -lo + cores + static_cast<std::int64_t>(x.core.size() + y.core.size());
        bool on_window = agree_on(x, y, lo, hi);
        bool on_wide = agree_on(x, y, 4 * lo, 4 * hi);
        CHECK(on_window == on_wide);
        CHECK(equals(x, y) == on_window);
    }
}

TEST_CASE("random_configuration: deterministic, canonical, unbiased") {
    CHECK(random_configuration(0, kBinary, 8, 4) == random_configuration(0, kBinary, 8, 4));

    std::int64_t counts[2] = {0, 0};
    constexpr int kDraws = 10000;
    for (std::uint64_t seed = 0; seed < kDraws; ++seed) {
        Configuration x = random_configuration(seed, kBinary, 8, 4);
        CHECK(is_canonical(x));
        ++counts[symbol_at(x, 0)];
    }
    // the value at any fixed position is a single uniform draw
    double sigma = std::sqrt(kDraws * 0.5 * 0.5);
    CHECK(std::abs(counts[0] - kDraws / 2.0) < 5 * sigma);

    Alphabet four{4};
    std::int64_t c4[4] = {0, 0, 0, 0};
    for (std::uint64_t seed = 0; seed < kDraws; ++seed)
        ++c4[symbol_at(random_configuration(seed, four, 6, 3), -2)];
    double sigma4 = std::sqrt(kDraws * 0.25 * 0.75);
    for (int s = 0; s < 4; ++s) CHECK(std::abs(c4[s] - kDraws / 4.0) < 5 * sigma4);
}

TEST_CASE("format_configuration round-trips through the parser") {
    for (std::uint64_t seed = 500; seed < 600; ++seed) {
        Configuration x = random_configuration(seed, kBinary, 8, 4);
        CHECK(parse_configuration(format_configuration(x), kBinary) == x);
    }
}
