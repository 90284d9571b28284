#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace landscape {

// Arbitrary-precision signed integer, sign/magnitude with 32-bit limbs.
// Spectral coefficients grow like 2^n times small constants and fourth
// moments like 2^{5n}, past what int64 holds at analysis sizes, so all
// ring coefficients use this type. Operands stay tiny (a few limbs);
// schoolbook arithmetic is plenty.
class BigInt {
public:
    BigInt() = default;

    BigInt(int64_t v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        uint64_t mag = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
        mag_.push_back(static_cast<uint32_t>(mag));
        if (mag >> 32) mag_.push_back(static_cast<uint32_t>(mag >> 32));
    }

    static BigInt pow2(uint32_t e) {
        BigInt r;
        r.sign_ = 1;
        r.mag_.assign(e / 32 + 1, 0);
        r.mag_.back() = 1u << (e % 32);
        return r;
    }

    int sgn() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] = static_cast<uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt times_pow2(uint32_t e) const {
        if (sign_ == 0 || e == 0) return *this;
        BigInt r;
        r.sign_ = sign_;
        size_t limbs = e / 32;
        uint32_t bits = e % 32;
        r.mag_.assign(mag_.size() + limbs + 1, 0);
        for (size_t i = 0; i < mag_.size(); ++i) {
            uint64_t v = static_cast<uint64_t>(mag_[i]) << bits;
            r.mag_[i + limbs] |= static_cast<uint32_t>(v);
            r.mag_[i + limbs + 1] |= static_cast<uint32_t>(v >> 32);
        }
        r.trim();
        return r;
    }

    // Exact division by 2^e; throws if any shifted-out bit is set.
    BigInt div_pow2_exact(uint32_t e) const {
        if (sign_ == 0 || e == 0) return *this;
        if (v2() < e) throw std::domain_error("BigInt: inexact division by power of two");
        BigInt r;
        r.sign_ = sign_;
        size_t limbs = e / 32;
        uint32_t bits = e % 32;
        r.mag_.assign(mag_.size() - limbs, 0);
        for (size_t i = 0; i < r.mag_.size(); ++i) {
            uint64_t v = mag_[i + limbs];
            if (i + limbs + 1 < mag_.size()) v |= static_cast<uint64_t>(mag_[i + limbs + 1]) << 32;
            r.mag_[i] = static_cast<uint32_t>(v >> bits);
        }
        r.trim();
        return r;
    }

    // 2-adic valuation; undefined for zero.
    uint32_t v2() const {
        if (sign_ == 0) throw std::domain_error("BigInt: v2(0)");
        uint32_t v = 0;
        size_t i = 0;
        while (mag_[i] == 0) {
            v += 32;
            ++i;
        }
        uint32_t limb = mag_[i];
        while (!(limb & 1)) {
            limb >>= 1;
            ++v;
        }
        return v;
    }

    uint32_t bit_length() const {
        if (sign_ == 0) return 0;
        uint32_t top = mag_.back();
        uint32_t b = 0;
        while (top) {
            top >>= 1;
            ++b;
        }
        return static_cast<uint32_t>((mag_.size() - 1) * 32) + b;
    }

    // Floor square root by bisection on the bit length; pre: nonnegative.
    BigInt isqrt() const {
        if (sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
        if (sign_ == 0) return BigInt();
        BigInt lo(0), hi = pow2(bit_length() / 2 + 1);
        while (lo < hi) {
            BigInt mid = (lo + hi + BigInt(1)).div2_floor();
            if (mid * mid <= *this)
                lo = mid;
            else
                hi = mid - BigInt(1);
        }
        return lo;
    }

    std::optional<BigInt> perfect_square_root() const {
        if (sign_ < 0) return std::nullopt;
        BigInt r = isqrt();
        if (r * r == *this) return r;
        return std::nullopt;
    }

    std::optional<int64_t> to_int64() const {
        if (sign_ == 0) return 0;
        if (mag_.size() > 2) return std::nullopt;
        uint64_t mag = mag_[0];
        if (mag_.size() == 2) mag |= static_cast<uint64_t>(mag_[1]) << 32;
        if (sign_ > 0) {
            if (mag > static_cast<uint64_t>(INT64_MAX)) return std::nullopt;
            return static_cast<int64_t>(mag);
        }
        if (mag > static_cast<uint64_t>(INT64_MAX) + 1) return std::nullopt;
        return -static_cast<int64_t>(mag - 1) - 1;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int d = 0; d < 9; ++d) {
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
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, trimmed

    BigInt div2_floor() const {
        // only used on nonnegative values inside isqrt
        BigInt r;
        if (sign_ == 0) return r;
        r.sign_ = 1;
        r.mag_.assign(mag_.size(), 0);
        for (size_t i = 0; i < mag_.size(); ++i) {
            uint64_t v = mag_[i];
            if (i + 1 < mag_.size()) v |= static_cast<uint64_t>(mag_[i + 1]) << 32;
            r.mag_[i] = static_cast<uint32_t>(v >> 1);
        }
        r.trim();
        return r;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // pre: |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

}  // namespace landscape
