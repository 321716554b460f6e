// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "whgeo/errors.hpp"
#include "whgeo/rational.hpp"

namespace whgeo {

// Q(theta) with theta^m = r for a positive rational r. The constructor
// reduces (r, m) until r is not a perfect p-th power for any prime p | m;
// x^m - r is then irreducible over Q (r > 0), so elements have a canonical
// representation and the zero test is exact.
struct RadicalField {
    Rational radicand;  // r > 0
    long long degree;   // m >= 1

    static std::shared_ptr<const RadicalField> make(Rational r, long long m) {
        if (r.sign() <= 0) raise(ErrorKind::Internal, "radicand must be positive");
        if (m < 1) raise(ErrorKind::Internal, "radical degree must be >= 1");
        bool changed = true;
        while (changed && m > 1) {
            changed = false;
            for (long long p = 2; p <= m && !changed; ++p) {
                if (m % p != 0) continue;
                BigInt rn, rd;
                if (r.num().is_perfect_kth_power(static_cast<uint64_t>(p), &rn) &&
                    r.den().is_perfect_kth_power(static_cast<uint64_t>(p), &rd)) {
                    r = Rational(rn, rd);
                    m /= p;
                    changed = true;
                }
            }
        }
        return std::make_shared<const RadicalField>(RadicalField{r, m});
    }

    double root_value() const {
        return std::pow(radicand.to_double(), 1.0 / static_cast<double>(degree));
    }
};

// An element of Q(theta): polynomial in theta of degree < m. A null field
// pointer means a plain rational (degree-0 coset), which mixes freely with
// any field.
class QExt {
public:
    QExt() = default;
    QExt(Rational r) {  // NOLINT(google-explicit-constructor)
        if (!r.is_zero()) c_.push_back(std::move(r));
    }
    QExt(long long v) : QExt(Rational(v)) {}  // NOLINT(google-explicit-constructor)

    static QExt theta(std::shared_ptr<const RadicalField> fld) {
        QExt q;
        if (fld->degree == 1) {
            if (!fld->radicand.is_zero()) q.c_ = {fld->radicand};
            return q;
        }
        q.c_ = {Rational(0), Rational(1)};
        q.fld_ = std::move(fld);
        return q;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }

    Rational rational_value() const {
        if (!is_rational()) raise(ErrorKind::CoefficientNotRational, "value lies outside Q");
        return c_.empty() ? Rational(0) : c_[0];
    }

    friend QExt operator-(const QExt& a) {
        QExt r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend QExt operator+(const QExt& a, const QExt& b) {
        auto fld = join(a, b);
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return make(std::move(c), std::move(fld));
    }

    friend QExt operator-(const QExt& a, const QExt& b) { return a + (-b); }

    friend QExt operator*(const QExt& a, const QExt& b) {
        if (a.is_zero() || b.is_zero()) return QExt();
        auto fld = join(a, b);
        long long m = fld ? fld->degree : 1;
        std::vector<Rational> c(static_cast<size_t>(m > 1 ? m : 1));
        std::vector<Rational> wide(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) wide[i + j] += a.c_[i] * b.c_[j];
        for (size_t k = 0; k < wide.size(); ++k) {
            if (wide[k].is_zero()) continue;
            if (m > 1 && k >= static_cast<size_t>(m))
                c[k - static_cast<size_t>(m)] += wide[k] * fld->radicand;
            else
                c[k] += wide[k];
        }
        return make(std::move(c), std::move(fld));
    }

    QExt& operator+=(const QExt& o) { return *this = *this + o; }
    QExt& operator-=(const QExt& o) { return *this = *this - o; }
    QExt& operator*=(const QExt& o) { return *this = *this * o; }

    QExt inverse() const {
        if (is_zero()) raise(ErrorKind::Internal, "inverse of zero in Q(theta)");
        if (is_rational()) return QExt(c_[0].inverse());
        // extended Euclid in Q[x] against x^m - r
        long long m = fld_->degree;
        std::vector<Rational> f(static_cast<size_t>(m) + 1);
        f[0] = -fld_->radicand;
        f[static_cast<size_t>(m)] = Rational(1);
        std::vector<Rational> r0 = f, r1 = c_;
        std::vector<Rational> s0 = {}, s1 = {Rational(1)};
        while (!poly_zero(r1)) {
            auto [q, rem] = poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto s2 = poly_sub(s0, poly_mul(q, s1));
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant (f irreducible), s0 * this == r0 mod f
        if (poly_deg(r0) != 0) raise(ErrorKind::Internal, "radical modulus not irreducible");
        Rational inv = r0[0].inverse();
        for (auto& x : s0) x *= inv;
        return make(std::move(s0), fld_);
    }

    friend QExt operator/(const QExt& a, const QExt& b) { return a * b.inverse(); }

    friend bool operator==(const QExt& a, const QExt& b) { return (a - b).is_zero(); }
    friend bool operator!=(const QExt& a, const QExt& b) { return !(a == b); }

    double to_double() const {
        if (c_.empty()) return 0.0;
        double th = fld_ ? fld_->root_value() : 1.0;
        double acc = 0.0, p = 1.0;
        for (const auto& x : c_) {
            acc += x.to_double() * p;
            p *= th;
        }
        return acc;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[i].to_string();
            if (i > 0) out += "*theta^" + std::to_string(i);
        }
        return out;
    }

private:
    static QExt make(std::vector<Rational> c, std::shared_ptr<const RadicalField> fld) {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
        QExt q;
        q.c_ = std::move(c);
        if (q.c_.size() > 1) q.fld_ = std::move(fld);
        return q;
    }

    static std::shared_ptr<const RadicalField> join(const QExt& a, const QExt& b) {
        if (!a.fld_) return b.fld_;
        if (!b.fld_) return a.fld_;
        if (a.fld_ != b.fld_ && (a.fld_->degree != b.fld_->degree ||
                                 a.fld_->radicand != b.fld_->radicand))
            raise(ErrorKind::Internal, "mixing distinct radical fields");
        return a.fld_;
    }

    static bool poly_zero(const std::vector<Rational>& p) {
        for (const auto& x : p)
            if (!x.is_zero()) return false;
        return true;
    }

    static int poly_deg(const std::vector<Rational>& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (!p[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    static std::vector<Rational> poly_sub(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        std::vector<Rational> r(std::max(a.size(), b.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.size()) r[i] += a[i];
            if (i < b.size()) r[i] -= b[i];
        }
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        return r;
    }

    static std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> r(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        return r;
    }

    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
        std::vector<Rational> num, const std::vector<Rational>& den) {
        int dd = poly_deg(den);
        if (dd < 0) raise(ErrorKind::Internal, "polynomial division by zero");
        std::vector<Rational> q;
        int dn = poly_deg(num);
        if (dn >= dd) q.assign(static_cast<size_t>(dn - dd) + 1, Rational(0));
        while ((dn = poly_deg(num)) >= dd) {
            Rational f = num[static_cast<size_t>(dn)] / den[static_cast<size_t>(dd)];
            q[static_cast<size_t>(dn - dd)] = f;
            for (int i = 0; i <= dd; ++i)
                num[static_cast<size_t>(dn - dd + i)] -= f * den[static_cast<size_t>(i)];
        }
        while (!num.empty() && num.back().is_zero()) num.pop_back();
        return {q, num};
    }

    std::vector<Rational> c_;
    std::shared_ptr<const RadicalField> fld_;
};

}  // namespace whgeo
