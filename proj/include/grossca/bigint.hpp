#pragma once

// Arbitrary-precision signed integers and exact rationals.
//
// Scope is deliberately small: the quantities in this library are sums of
// scaled integer powers, so all we ever need is add/sub/mul, exact divmod,
// gcd, powers and comparisons. Magnitudes are little-endian base-2^32.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grossca {

class BigInt {
public:
    BigInt() = default;

    BigInt(std::int64_t v) {                       // NOLINT(google-explicit-constructor)
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // careful with INT64_MIN: negate as unsigned
        std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(u));
        if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) return make(a.sign_, add_mag(a.mag_, b.mag_));
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt{};
        if (c > 0) return make(a.sign_, sub_mag(a.mag_, b.mag_));
        return make(b.sign_, sub_mag(b.mag_, a.mag_));
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        return make(a.sign_ * b.sign_, mul_mag(a.mag_, b.mag_));
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
        return c <=> 0;
    }

    // Truncating division; remainder has the dividend's sign.
    // Only ever used for exact divisions and decimal printing here.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.mag_, b.mag_) < 0) return {BigInt{}, a};
        auto [q, r] = divmod_mag(a.mag_, b.mag_);
        BigInt qi = make(a.sign_ * b.sign_, std::move(q));
        BigInt ri = make(a.sign_, std::move(r));
        return {qi, ri};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    static BigInt pow(const BigInt& base, std::uint64_t e) {
        BigInt acc{1};
        BigInt b = base;
        while (e) {
            if (e & 1) acc *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return acc;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // binary gcd: strip common twos, then subtract-and-shift
        int shift = 0;
        while (a.even() && b.even()) {
            a.shr1();
            b.shr1();
            ++shift;
        }
        while (a.even()) a.shr1();
        while (!b.is_zero()) {
            while (b.even()) b.shr1();
            if (a > b) std::swap(a, b);
            b -= a;
        }
        for (int i = 0; i < shift; ++i) a.shl1();
        return a;
    }

    // Remainder of division by a small modulus, for divisibility tests.
    std::uint32_t mod_small(std::uint32_t m) const {
        if (m == 0) throw std::domain_error("BigInt: mod by zero");
        std::uint64_t rem = 0;
        for (std::size_t i = mag_.size(); i-- > 0;)
            rem = ((rem << 32) | mag_[i]) % m;
        return static_cast<std::uint32_t>(rem);   // sign ignored: callers test rem==0
    }

    // Exact division by a small divisor; caller guarantees divisibility.
    BigInt div_small_exact(std::uint32_t d) const {
        assert(d != 0);
        BigInt r = *this;
        std::uint64_t rem = 0;
        for (std::size_t i = r.mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | r.mag_[i];
            r.mag_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        assert(rem == 0);
        r.trim();
        return r;
    }

    std::int64_t to_int64() const {
        std::uint64_t u = 0;
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in int64");
        if (mag_.size() >= 1) u = mag_[0];
        if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
        if (sign_ >= 0) {
            if (u > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("BigInt: does not fit in int64");
            return static_cast<std::int64_t>(u);
        }
        if (u > static_cast<std::uint64_t>(INT64_MAX) + 1) throw std::overflow_error("BigInt: does not fit in int64");
        return -static_cast<std::int64_t>(u - 1) - 1;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string digits;
        std::vector<std::uint32_t> m = mag_;
        while (!(m.size() == 1 && m[0] == 0)) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (m.size() > 1 && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> mag_;    // little-endian, empty iff zero

    static BigInt make(int sign, std::vector<std::uint32_t> mag) {
        BigInt r;
        r.mag_ = std::move(mag);
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : sign;
        return r;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    bool even() const { return mag_.empty() || (mag_[0] & 1) == 0; }

    void shr1() {
        std::uint32_t carry = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            std::uint32_t next = mag_[i] & 1;
            mag_[i] = (mag_[i] >> 1) | (carry << 31);
            carry = next;
        }
        trim();
    }

    void shl1() {
        std::uint32_t carry = 0;
        for (auto& w : mag_) {
            std::uint32_t next = w >> 31;
            w = (w << 1) | carry;
            carry = next;
        }
        if (carry) mag_.push_back(carry);
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (s < 0) {
                s += (std::int64_t{1} << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(s);
        }
        assert(borrow == 0);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k++] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
        }
        return r;
    }

    // binary long division of magnitudes, |a| >= |b| > 0
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        BigInt rem;
        BigInt quo;
        rem.mag_.reserve(b.size() + 1);
        std::size_t nbits = a.size() * 32;
        quo.mag_.assign(a.size(), 0);
        for (std::size_t bit = nbits; bit-- > 0;) {
            rem.shl1();
            std::uint32_t in = (a[bit / 32] >> (bit % 32)) & 1;
            if (in) {
                if (rem.mag_.empty()) rem.mag_.push_back(1);
                else rem.mag_[0] |= 1;
            }
            if (cmp_mag(rem.mag_, b) >= 0) {
                rem.mag_ = sub_mag(rem.mag_, b);
                rem.trim();
                quo.mag_[bit / 32] |= (std::uint32_t{1} << (bit % 32));
            }
        }
        return {std::move(quo.mag_), std::move(rem.mag_)};
    }
};

// Exact rational, always reduced, denominator > 0.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(std::int64_t v) : num_(v), den_(1) {}   // NOLINT(google-explicit-constructor)
    BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    BigRational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == BigInt{1} && den_ == BigInt{1}; }
    int sign() const { return num_.sign(); }

    BigRational operator-() const {
        BigRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    BigRational abs() const {
        BigRational r = *this;
        r.num_ = r.num_.abs();
        return r;
    }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational{a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return a + (-b); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational{a.num_ * b.num_, a.den_ * b.den_};
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
        return BigRational{a.num_ * b.den_, a.den_ * b.num_};
    }

    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // base^e for integer e of either sign, base != 0
    static BigRational pow(const BigInt& base, std::int64_t e) {
        if (base.is_zero()) throw std::domain_error("BigRational: pow of zero base");
        if (e >= 0) return BigRational{BigInt::pow(base, static_cast<std::uint64_t>(e)), BigInt{1}};
        return BigRational{BigInt{1}, BigInt::pow(base, static_cast<std::uint64_t>(-e))};
    }

    // largest k with base^k dividing the rational exactly (k may be negative)
    std::int64_t valuation(std::uint32_t base) const {
        assert(base >= 2);
        if (is_zero()) throw std::domain_error("BigRational: valuation of zero");
        std::int64_t k = 0;
        BigInt n = num_.abs();
        while (n.mod_small(base) == 0) {
            n = n.div_small_exact(base);
            ++k;
        }
        if (k > 0) return k;
        BigInt d = den_;
        while (d.mod_small(base) == 0) {
            d = d.div_small_exact(base);
            --k;
        }
        return k;
    }

    std::string to_string() const {
        if (den_ == BigInt{1}) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt{1};
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt{1})) {
            num_ = BigInt::divmod(num_, g).first;
            den_ = BigInt::divmod(den_, g).first;
        }
    }
};

}  // namespace grossca
