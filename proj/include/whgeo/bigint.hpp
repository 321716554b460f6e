// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "whgeo/errors.hpp"

namespace whgeo {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs
// (little endian). Exponent bookkeeping in the series engine compounds
// numerators/denominators past 64 bits, so the exact kernel cannot rely
// on machine integers. Division is deliberately absent from the hot
// paths: rational normalization uses binary gcd and decimal output uses
// single-limb division only.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {  // NOLINT(google-explicit-constructor)
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        while (u != 0) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}  // NOLINT

    static BigInt from_string(const std::string& text) {
        if (text.empty()) raise(ErrorKind::SyntaxError, "empty integer literal");
        size_t i = 0;
        int sign = 1;
        if (text[0] == '+' || text[0] == '-') {
            sign = text[0] == '-' ? -1 : 1;
            i = 1;
        }
        if (i == text.size()) raise(ErrorKind::SyntaxError, "sign without digits");
        BigInt r;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c < '0' || c > '9')
                raise(ErrorKind::SyntaxError, "invalid digit in integer literal: " + text);
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<uint32_t>(c - '0'));
        }
        if (!r.is_zero()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

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
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
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
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a.mag_[i];
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = r.mag_[i + j] + ai * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry != 0) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        if (r.is_zero()) r.sign_ = 0;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // three-way compare
    friend int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt shifted_left(size_t bits) const {
        if (is_zero() || bits == 0) return *this;
        BigInt r;
        size_t limb_shift = bits / 32, bit_shift = bits % 32;
        r.mag_.assign(mag_.size() + limb_shift + 1, 0);
        for (size_t i = 0; i < mag_.size(); ++i) {
            uint64_t v = static_cast<uint64_t>(mag_[i]) << bit_shift;
            r.mag_[i + limb_shift] |= static_cast<uint32_t>(v & 0xffffffffULL);
            r.mag_[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
        }
        r.trim();
        r.sign_ = sign_;
        return r;
    }

    BigInt shifted_right(size_t bits) const {
        if (is_zero()) return *this;
        size_t limb_shift = bits / 32, bit_shift = bits % 32;
        if (limb_shift >= mag_.size()) return BigInt();
        BigInt r;
        r.mag_.assign(mag_.size() - limb_shift, 0);
        for (size_t i = 0; i < r.mag_.size(); ++i) {
            uint64_t v = mag_[i + limb_shift] >> bit_shift;
            if (bit_shift != 0 && i + limb_shift + 1 < mag_.size())
                v |= static_cast<uint64_t>(mag_[i + limb_shift + 1]) << (32 - bit_shift);
            r.mag_[i] = static_cast<uint32_t>(v);
        }
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : sign_;
        return r;
    }

    size_t bit_length() const {
        if (mag_.empty()) return 0;
        uint32_t top = mag_.back();
        size_t bits = (mag_.size() - 1) * 32;
        while (top != 0) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    bool bit(size_t i) const {
        size_t limb = i / 32;
        if (limb >= mag_.size()) return false;
        return (mag_[limb] >> (i % 32)) & 1u;
    }

    size_t trailing_zero_bits() const {
        if (mag_.empty()) return 0;
        size_t i = 0;
        while (mag_[i] == 0) ++i;
        uint32_t limb = mag_[i];
        size_t bits = i * 32;
        while ((limb & 1u) == 0) {
            ++bits;
            limb >>= 1;
        }
        return bits;
    }

    // gcd of magnitudes (Stein's algorithm); result nonnegative
    friend BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        size_t az = a.trailing_zero_bits();
        size_t bz = b.trailing_zero_bits();
        size_t shift = std::min(az, bz);
        a = a.shifted_right(az);
        b = b.shifted_right(bz);
        while (true) {
            if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a, b);
            b = b - a;  // both odd -> difference even (or zero)
            if (b.is_zero()) break;
            b = b.shifted_right(b.trailing_zero_bits());
        }
        return a.shifted_left(shift);
    }

    BigInt pow(uint64_t e) const {
        BigInt base = *this, result = 1;
        while (e != 0) {
            if (e & 1ULL) result *= base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // floor of the k-th root of |this| (this must be nonnegative, k >= 1)
    BigInt kth_root_floor(uint64_t k) const {
        if (sign_ < 0) raise(ErrorKind::Internal, "kth_root_floor of negative value");
        if (k == 0) raise(ErrorKind::Internal, "0th root");
        if (is_zero() || k == 1) return *this;
        size_t bits = bit_length();
        size_t root_bits = bits / k + 2;
        BigInt lo = 0, hi = BigInt(1).shifted_left(root_bits);
        // binary search for largest r with r^k <= this
        while (lo < hi) {
            BigInt mid = (lo + hi + BigInt(1)).shifted_right(1);
            if (mid.pow(k) <= *this)
                lo = mid;
            else
                hi = mid - BigInt(1);
        }
        return lo;
    }

    bool is_perfect_kth_power(uint64_t k, BigInt* root_out = nullptr) const {
        if (k == 1) {
            if (root_out) *root_out = *this;
            return true;
        }
        if (sign_ < 0) {
            if (k % 2 == 0) return false;
            BigInt r;
            if (!abs().is_perfect_kth_power(k, &r)) return false;
            if (root_out) *root_out = -r;
            return true;
        }
        BigInt r = kth_root_floor(k);
        if (r.pow(k) != *this) return false;
        if (root_out) *root_out = r;
        return true;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            // divide by 1e9, collect remainder
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
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

    double to_double() const {
        if (is_zero()) return 0.0;
        // take the top 64 bits and scale
        size_t bits = bit_length();
        double value;
        if (bits <= 64) {
            uint64_t v = 0;
            for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
            value = static_cast<double>(v);
        } else {
            size_t drop = bits - 64;
            BigInt top = shifted_right(drop);
            uint64_t v = 0;
            for (size_t i = top.mag_.size(); i-- > 0;) v = (v << 32) | top.mag_[i];
            value = std::ldexp(static_cast<double>(v), static_cast<int>(drop));
        }
        return sign_ < 0 ? -value : value;
    }

    // value fits in long long? (for small fast paths and tests)
    bool fits_int64() const {
        if (bit_length() > 63) return false;
        return true;
    }

    long long to_int64() const {
        long long v = 0;
        for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
        return sign_ < 0 ? -v : v;
    }

private:
    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void mul_small_inplace(uint32_t m) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            limb = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry != 0) mag_.push_back(static_cast<uint32_t>(carry));
        if (!mag_.empty() && sign_ == 0) sign_ = 1;
        trim();
    }

    void add_small_inplace(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry != 0 && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry != 0) mag_.push_back(static_cast<uint32_t>(carry));
        if (!mag_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    std::vector<uint32_t> mag_;
    int sign_ = 0;
};

}  // namespace whgeo
