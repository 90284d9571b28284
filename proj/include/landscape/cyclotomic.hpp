#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "landscape/bigint.hpp"

namespace landscape {

// Element of Z[zeta] with zeta a primitive 2^k-th root of unity, written on
// the power basis {1, zeta, ..., zeta^(2^(k-1)-1)}. The single reduction rule
// is zeta^(2^(k-1)) = -1; representation on this basis is unique, so equality
// is coefficient-tuple equality and no other normalization exists.
class CycInt {
public:
    explicit CycInt(uint32_t level_exp)
        : k_(checked_level(level_exp)), c_(size_t(1) << (level_exp - 1)) {}

    static CycInt zero(uint32_t k) { return CycInt(k); }

    static CycInt from_integer(const BigInt& v, uint32_t k) {
        CycInt r(k);
        r.c_[0] = v;
        return r;
    }

    // zeta^j for 0 <= j < 2^k.
    static CycInt monomial(uint32_t j, uint32_t k) {
        CycInt r(k);
        uint32_t half = 1u << (k - 1);
        if (j >= 2 * half) throw std::invalid_argument("CycInt: monomial exponent out of range");
        if (j < half)
            r.c_[j] = 1;
        else
            r.c_[j - half] = -1;
        return r;
    }

    // zeta^(2^(k-3)) - zeta^(3*2^(k-3)), the square root of 2; needs k >= 3.
    // For k = 2 the sqrt(2) quantities live outside Q(i) and are handled by
    // the Gaussian-integer branch of the regularity classifier instead.
    static CycInt sqrt2_element(uint32_t k) {
        if (k < 3) throw std::invalid_argument("CycInt: sqrt2_element requires k >= 3");
        uint32_t e = 1u << (k - 3);
        return monomial(e, k) - monomial(3 * e, k);
    }

    uint32_t level_exp() const { return k_; }
    size_t dim() const { return c_.size(); }
    const BigInt& coeff(size_t j) const { return c_.at(j); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        check_levels(a, b);
        CycInt r(a.k_);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend CycInt operator-(const CycInt& a, const CycInt& b) {
        check_levels(a, b);
        CycInt r(a.k_);
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    CycInt operator-() const {
        CycInt r(k_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    // Negacyclic convolution: index overflow past the basis wraps with a sign flip.
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        check_levels(a, b);
        CycInt r(a.k_);
        size_t d = a.c_.size();
        for (size_t i = 0; i < d; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < d; ++j) {
                if (b.c_[j].is_zero()) continue;
                BigInt p = a.c_[i] * b.c_[j];
                size_t t = i + j;
                if (t < d)
                    r.c_[t] += p;
                else
                    r.c_[t - d] -= p;
            }
        }
        return r;
    }

    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.k_ == b.k_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    CycInt scaled(const BigInt& s) const {
        CycInt r(k_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    // Multiplication by zeta^j without a full convolution.
    CycInt times_monomial(uint32_t j) const {
        uint32_t half = static_cast<uint32_t>(c_.size());
        j %= 2 * half;
        CycInt r(k_);
        for (uint32_t i = 0; i < half; ++i) {
            if (c_[i].is_zero()) continue;
            uint32_t t = i + j;
            bool flip = false;
            while (t >= half) {
                t -= half;
                flip = !flip;
            }
            r.c_[t] += flip ? -c_[i] : c_[i];
        }
        return r;
    }

    // Accumulate count * zeta^j; the workhorse of definitional character sums.
    void add_monomial_multiple(uint32_t j, const BigInt& count) {
        uint32_t half = static_cast<uint32_t>(c_.size());
        j %= 2 * half;
        if (j < half)
            c_[j] += count;
        else
            c_[j - half] -= count;
    }

    // Complex conjugation zeta -> zeta^(-1).
    CycInt conj() const {
        CycInt r(k_);
        r.c_[0] = c_[0];
        size_t d = c_.size();
        for (size_t j = 1; j < d; ++j) r.c_[d - j] = -c_[j];
        return r;
    }

    // a * conj(a); the squared modulus under every complex embedding.
    CycInt norm_sq() const { return *this * conj(); }

    // Constant coefficient when all others vanish: the rational integers
    // inside the ring, which is where landscape moduli tests happen.
    std::optional<BigInt> as_scalar() const {
        for (size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return std::nullopt;
        return c_[0];
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            std::string v = c_[j].str();
            if (!first) {
                if (v[0] == '-') {
                    os << " - ";
                    v = v.substr(1);
                } else {
                    os << " + ";
                }
            }
            if (j == 0)
                os << v;
            else if (v == "1")
                os << "z^" << j;
            else if (v == "-1")
                os << "-z^" << j;
            else
                os << v << "*z^" << j;
            first = false;
        }
        if (first) return "0";
        return os.str();
    }

    // Floating-point rendering for display only; carries no correctness weight.
    std::pair<double, double> approx_complex() const {
        double re = 0, im = 0;
        size_t d = c_.size();
        for (size_t j = 0; j < d; ++j) {
            if (c_[j].is_zero()) continue;
            auto v = c_[j].to_int64();
            double coeff = v ? static_cast<double>(*v) : std::stod(c_[j].str());
            double angle = 3.14159265358979323846 * static_cast<double>(j) / static_cast<double>(d);
            re += coeff * std::cos(angle);
            im += coeff * std::sin(angle);
        }
        return {re, im};
    }

private:
    uint32_t k_;
    std::vector<BigInt> c_;

    static uint32_t checked_level(uint32_t k) {
        if (k < 1) throw std::invalid_argument("CycInt: level exponent must be >= 1");
        if (k > 24) throw std::invalid_argument("CycInt: level exponent unreasonably large");
        return k;
    }

    static void check_levels(const CycInt& a, const CycInt& b) {
        if (a.k_ != b.k_) throw std::invalid_argument("CycInt: level exponent mismatch");
    }
};

}  // namespace landscape
