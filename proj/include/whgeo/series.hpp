// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "whgeo/errors.hpp"
#include "whgeo/rational.hpp"

namespace whgeo {

// Truncated fractional-power series over a coefficient field K (Rational or
// QExt). `order` is the inclusive validity bound: coefficients of exponents
// <= order are exact, anything beyond is unspecified. nullopt means the
// series is exact (a finite fractional-power polynomial).
template <class K>
struct Series {
    struct Term {
        Rational exp;
        K coeff;
    };

    std::vector<Term> terms;
    std::optional<Rational> order;

    bool zero_to_order() const { return terms.empty(); }

    std::optional<Rational> valuation() const {
        if (terms.empty()) return std::nullopt;
        return terms.front().exp;
    }

    const K& leading_coeff() const {
        if (terms.empty()) raise(ErrorKind::Internal, "leading coefficient of a zero series");
        return terms.front().coeff;
    }
};

namespace series {

inline std::optional<Rational> min_order(const std::optional<Rational>& a,
                                         const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

// lower bound for the valuation (used for order propagation in products)
template <class K>
Rational valuation_floor(const Series<K>& s) {
    if (!s.terms.empty()) return s.terms.front().exp;
    if (s.order) return *s.order;
    // exact zero: any bound works; large sentinel keeps products exact
    return Rational(1000000000LL);
}

template <class K>
Series<K> normalized(std::vector<typename Series<K>::Term> terms, std::optional<Rational> order) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.exp < b.exp; });
    std::vector<typename Series<K>::Term> out;
    for (auto& t : terms) {
        if (order && t.exp > *order) continue;
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == K()) out.pop_back();
    }
    return Series<K>{std::move(out), std::move(order)};
}

template <class K>
Series<K> zero(std::optional<Rational> order = std::nullopt) {
    return Series<K>{{}, std::move(order)};
}

template <class K>
Series<K> monomial(K coeff, Rational exp, std::optional<Rational> order = std::nullopt) {
    if (coeff == K()) return zero<K>(order);
    if (order && exp > *order) return zero<K>(order);
    return Series<K>{{{std::move(exp), std::move(coeff)}}, std::move(order)};
}

template <class K>
Series<K> one() {
    return monomial<K>(K(Rational(1)), Rational(0));
}

template <class K>
Series<K> truncated(const Series<K>& s, const std::optional<Rational>& bound) {
    auto order = min_order(s.order, bound);
    std::vector<typename Series<K>::Term> terms;
    for (const auto& t : s.terms)
        if (!order || t.exp <= *order) terms.push_back(t);
    return Series<K>{std::move(terms), std::move(order)};
}

template <class K>
Series<K> add(const Series<K>& a, const Series<K>& b) {
    auto terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return normalized<K>(std::move(terms), min_order(a.order, b.order));
}

template <class K>
Series<K> negate(const Series<K>& a) {
    Series<K> r = a;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

template <class K>
Series<K> sub(const Series<K>& a, const Series<K>& b) {
    return add(a, negate(b));
}

template <class K>
Series<K> mul(const Series<K>& a, const Series<K>& b) {
    if ((a.terms.empty() && !a.order) || (b.terms.empty() && !b.order))
        return zero<K>();  // exact zero absorbs
    std::optional<Rational> order;
    if (a.order) order = min_order(order, *a.order + valuation_floor(b));
    if (b.order) order = min_order(order, *b.order + valuation_floor(a));
    std::vector<typename Series<K>::Term> terms;
    terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            Rational e = ta.exp + tb.exp;
            if (order && e > *order) continue;
            terms.push_back({std::move(e), ta.coeff * tb.coeff});
        }
    return normalized<K>(std::move(terms), std::move(order));
}

template <class K>
Series<K> scale(const Series<K>& a, const K& k) {
    if (k == K()) return zero<K>(a.order);
    Series<K> r = a;
    for (auto& t : r.terms) t.coeff = t.coeff * k;
    // exact coefficient arithmetic in a field: no new zeros appear
    return r;
}

template <class K>
Series<K> shift(const Series<K>& a, const Rational& e) {
    Series<K> r = a;
    for (auto& t : r.terms) t.exp += e;
    if (r.order) r.order = *r.order + e;
    return r;
}

// substitute s = u^q, q > 0 (same curve, exponents scaled)
template <class K>
Series<K> power_substitute(const Series<K>& a, const Rational& q) {
    if (q.sign() <= 0) raise(ErrorKind::Internal, "power substitution needs q > 0");
    Series<K> r = a;
    for (auto& t : r.terms) t.exp *= q;
    if (r.order) r.order = *r.order * q;
    return r;
}

template <class K>
Series<K> pow_int(const Series<K>& a, long long n) {
    if (n < 0) raise(ErrorKind::Internal, "negative series power");
    Series<K> acc = one<K>();
    Series<K> base = a;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        base = n > 1 ? mul(base, base) : base;
        n >>= 1;
    }
    return acc;
}

// (1 + W)^p for val(W) > 0, truncated at `target`; binomial series, so the
// coefficients stay in the field generated by W's coefficients.
template <class K>
Series<K> unit_pow(const Series<K>& w, const Rational& p, const Rational& target) {
    if (!w.terms.empty() && w.terms.front().exp <= Rational(0))
        raise(ErrorKind::Internal, "unit_pow needs a positive-valuation tail");
    std::optional<Rational> order = min_order(w.order, target);
    Series<K> result = truncated(one<K>(), order);
    Series<K> wk = truncated(one<K>(), order);
    Rational binom(1);
    for (long long k = 1;; ++k) {
        wk = mul(wk, w);
        if (wk.zero_to_order()) break;
        binom = binom * (p - Rational(k - 1)) / Rational(k);
        if (binom.is_zero()) break;  // integer p >= 0 exhausted
        result = add(result, scale(wk, K(binom)));
        if (valuation_floor(wk) > target) break;
    }
    return truncated(result, order);
}

template <class K>
Series<K> derivative(const Series<K>& s) {
    Series<K> r;
    if (s.order) r.order = *s.order - Rational(1);
    for (const auto& t : s.terms) {
        if (t.exp.is_zero()) continue;
        r.terms.push_back({t.exp - Rational(1), K(t.exp) * t.coeff});
    }
    return r;
}

// a / b through exponents <= target; b must have a nonzero leading term
template <class K>
Series<K> divide(const Series<K>& a, const Series<K>& b, const Rational& target) {
    if (b.terms.empty()) raise(ErrorKind::Internal, "series division by zero");
    Rational vb = b.terms.front().exp;
    K cb = b.terms.front().coeff;
    Series<K> wb = sub(scale(shift(b, -vb), K(Rational(1)) / cb), one<K>());
    Series<K> inv_unit = unit_pow(wb, Rational(-1), target + vb + Rational(1));
    Series<K> inv_b = shift(scale(inv_unit, K(Rational(1)) / cb), -vb);
    return truncated(mul(a, inv_b), std::optional<Rational>(target));
}

// splits a nonzero series as c * s^v * (1 + W); returns (v, c, W)
template <class K>
std::tuple<Rational, K, Series<K>> unit_decompose(const Series<K>& s) {
    if (s.terms.empty()) raise(ErrorKind::Internal, "unit_decompose of zero series");
    Rational v = s.terms.front().exp;
    K c = s.terms.front().coeff;
    Series<K> unit = scale(shift(s, -v), K(Rational(1)) / c);
    // drop the constant 1
    Series<K> w = sub(unit, one<K>());
    return {v, c, w};
}

// evaluates sum_l coeffs[l] * g^{exps[l]} for nonnegative integer exponents
template <class K>
Series<K> eval_int_powers(const std::vector<std::pair<long long, K>>& terms, const Series<K>& g,
                          const std::optional<Rational>& target) {
    if (terms.empty()) return zero<K>();  // the empty sum is exactly zero
    std::vector<std::pair<long long, K>> sorted = terms;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Series<K> result = zero<K>(target);
    Series<K> gpow = truncated(one<K>(), target);
    long long cur = 0;
    for (const auto& [e, c] : sorted) {
        if (e < 0) raise(ErrorKind::Internal, "negative exponent in integer evaluation");
        while (cur < e) {
            gpow = truncated(mul(gpow, g), target);
            ++cur;
        }
        result = add(result, scale(gpow, c));
    }
    return truncated(result, target);
}

// K = Rational only: exact fractional power of a general series.
// (c s^v (1+W))^p = c^p s^{vp} (1+W)^p; fails if c^p leaves Q.
inline Series<Rational> pow_fractional(const Series<Rational>& s, const Rational& p,
                                       const Rational& target) {
    auto [v, c, w] = unit_decompose(s);
    if (v * p > target) return zero<Rational>(target);
    auto cp = rational_pow(c, p);
    if (!cp)
        raise(ErrorKind::CoefficientNotRational,
              "leading coefficient " + c.to_string() + " has no rational power " + p.to_string());
    Series<Rational> u = unit_pow(w, p, target - v * p);
    return truncated(shift(scale(u, *cp), v * p), target);
}

// composition f(g) where f may have fractional exponents; every fractional
// power of g must stay rational (checked per exponent).
inline Series<Rational> compose_fractional(const Series<Rational>& f, const Series<Rational>& g,
                                           const Rational& target) {
    if (f.terms.empty() && !f.order) return zero<Rational>();
    Series<Rational> result = zero<Rational>(target);
    if (f.order) {
        // unknown tail of f enters at exponent > f.order scaled by val(g)
        Rational vg = valuation_floor(g);
        result.order = series::min_order(result.order, *f.order * vg);
    }
    auto bound = result.order ? *result.order : target;
    Rational vg = valuation_floor(g);
    for (const auto& t : f.terms) {
        if (vg * t.exp > bound) continue;  // contributes strictly beyond the bound
        Series<Rational> piece;
        if (t.exp.is_zero())
            piece = truncated(one<Rational>(), bound);
        else if (t.exp.is_integer() && t.exp.sign() > 0)
            piece = truncated(pow_int(g, t.exp.num().to_int64()), bound);
        else
            piece = pow_fractional(g, t.exp, bound);
        result = add(result, scale(piece, t.coeff));
    }
    return truncated(result, result.order ? *result.order : target);
}

}  // namespace series
}  // namespace whgeo
