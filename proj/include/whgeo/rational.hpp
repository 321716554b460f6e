// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "whgeo/bigint.hpp"
#include "whgeo/errors.hpp"

namespace whgeo {

// Exact rational number, always in lowest terms, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : num_(v), den_(1) {}        // NOLINT(google-explicit-constructor)

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    // parses "p", "p/q", with optional sign on p
    static Rational from_string(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt::from_string(text), 1);
        return Rational(BigInt::from_string(text.substr(0, slash)),
                        BigInt::from_string(text.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational abs() const {
        Rational r = *this;
        r.num_ = r.num_.abs();
        return r;
    }

    // Sums and products keep gcd operands small (cross-reduction before
    // multiplying); with reduced inputs the results are already reduced,
    // which matters once series coefficients grow to hundreds of digits.
    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        BigInt g = gcd(a.den_, b.den_);
        if (g.is_one()) return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        BigInt ad = divide_exact(a.den_, g);
        BigInt bd = divide_exact(b.den_, g);
        BigInt t = a.num_ * bd + b.num_ * ad;
        BigInt g2 = gcd(t, g);
        if (g2.is_one()) return raw(std::move(t), a.den_ * bd);
        return raw(divide_exact(t, g2), divide_exact(a.den_, g2) * bd);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return Rational();
        BigInt g1 = gcd(a.num_, b.den_);
        BigInt g2 = gcd(b.num_, a.den_);
        return raw(divide_exact(a.num_, g1) * divide_exact(b.num_, g2),
                   divide_exact(a.den_, g2) * divide_exact(b.den_, g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return a * b.inverse();
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) raise(ErrorKind::Internal, "inverse of zero");
        return num_.is_negative() ? raw(-den_, -num_) : raw(den_, num_);
    }

    friend int cmp(const Rational& a, const Rational& b) {
        return cmp(a.num_ * b.den_, b.num_ * a.den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    // integer exponent, negative allowed for nonzero values; powers of a
    // reduced fraction stay reduced
    Rational pow_int(long long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return inverse().pow_int(-e);
        return raw(num_.pow(static_cast<uint64_t>(e)), den_.pow(static_cast<uint64_t>(e)));
    }

    double to_double() const {
        size_t bn = num_.bit_length(), bd = den_.bit_length();
        if (bn < 1000 && bd < 1000) return num_.to_double() / den_.to_double();
        size_t k = std::min(bn, bd) - 64;
        return num_.shifted_right(k).to_double() / den_.shifted_right(k).to_double();
    }

    // "p" for integers, "p/q" otherwise
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    // always "p/q", reduced (the wire format for exponents)
    std::string fraction_string() const { return num_.to_string() + "/" + den_.to_string(); }

private:
    // bypasses normalization: callers guarantee den > 0 and lowest terms
    static Rational raw(BigInt num, BigInt den) {
        Rational r;
        if (num.is_zero()) return r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) raise(ErrorKind::Internal, "zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.fits_int64() && den_.fits_int64()) {
            long long n = num_.to_int64(), d = den_.to_int64();
            long long g = gcd64(n < 0 ? -n : n, d);
            num_ = n / g;
            den_ = d / g;
            return;
        }
        BigInt g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }

    static long long gcd64(long long a, long long b) {
        while (b != 0) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    // exact division by a known divisor (here always a gcd of the dividend),
    // shift-subtract long division on magnitudes
    static BigInt divide_exact(const BigInt& value, const BigInt& divisor) {
        BigInt a = value.abs(), d = divisor.abs();
        if (d.is_one()) return value;
        BigInt q = 0, r = 0;
        size_t bits = a.bit_length();
        for (size_t i = bits; i-- > 0;) {
            r = r.shifted_left(1);
            if (a.bit(i)) r += 1;
            q = q.shifted_left(1);
            if (r >= d) {
                r -= d;
                q += 1;
            }
        }
        if (value.is_negative() != divisor.is_negative()) q = -q;
        return q;
    }

    BigInt num_;
    BigInt den_;
};

// c^(a/b) when it exists in Q (b-th root of c exact, then a-th power).
// For negative c only odd root indices have a real rational root.
inline std::optional<Rational> rational_pow(const Rational& base, const Rational& exponent) {
    if (exponent.is_zero()) {
        if (base.is_zero()) return std::nullopt;
        return Rational(1);
    }
    if (base.is_zero()) {
        if (exponent.sign() < 0) return std::nullopt;
        return Rational(0);
    }
    if (!exponent.den().fits_int64() || !exponent.num().fits_int64()) return std::nullopt;
    long long b = exponent.den().to_int64();
    long long a = exponent.num().to_int64();
    BigInt root_num, root_den;
    if (!base.num().is_perfect_kth_power(static_cast<uint64_t>(b), &root_num)) return std::nullopt;
    if (!base.den().is_perfect_kth_power(static_cast<uint64_t>(b), &root_den)) return std::nullopt;
    return Rational(root_num, root_den).pow_int(a);
}

}  // namespace whgeo
