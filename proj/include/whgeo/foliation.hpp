// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whgeo/errors.hpp"
#include "whgeo/rational.hpp"
#include "whgeo/weights.hpp"

namespace whgeo {

using Point = std::vector<Rational>;

// (t^{a_1} x_1, ..., t^{a_n} x_n), exact
inline Point flow(const WeightVector& w, const Point& x, const Rational& t) {
    if (t.sign() <= 0) raise(ErrorKind::Internal, "flow parameter must be positive");
    if (x.size() != w.size()) raise(ErrorKind::Internal, "flow: dimension mismatch");
    Point y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] * t.pow_int(w[i]);
    return y;
}

inline bool is_zero_point(const Point& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

namespace detail {

// largest index (0-based) with a nonzero coordinate
inline size_t last_nonzero(const Point& x) {
    for (size_t i = x.size(); i-- > 0;)
        if (!x[i].is_zero()) return i;
    raise(ErrorKind::ZeroPoint, "point is the origin");
}

// Decides y_i |y_m|^{-a_i/a_m} == z_i |z_m|^{-a_i/a_m} without leaving Q:
// signs must match and |y_i|^{a_m} |z_m|^{a_i} == |z_i|^{a_m} |y_m|^{a_i}.
inline bool slice_coordinates_equal(const Rational& yi, const Rational& zi, const Rational& ym,
                                    const Rational& zm, long long ai, long long am) {
    if (yi.sign() != zi.sign()) return false;
    if (yi.is_zero()) return true;
    return yi.abs().pow_int(am) * zm.abs().pow_int(ai) ==
           zi.abs().pow_int(am) * ym.abs().pow_int(ai);
}

}  // namespace detail

// Leaves of the same foliation through x and y close over the same curve iff
// supports and signs agree and the coordinate ratios are consistent with a
// single (real) flow parameter. The cross-power test decides this exactly.
inline bool same_leaf(const WeightVector& w, const Point& x, const Point& y) {
    if (x.size() != w.size() || y.size() != w.size())
        raise(ErrorKind::Internal, "same_leaf: dimension mismatch");
    if (is_zero_point(x) || is_zero_point(y)) raise(ErrorKind::ZeroPoint, "leaf through the origin");
    size_t first = x.size();
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].sign() != y[i].sign()) return false;
        if (first == x.size() && !x[i].is_zero()) first = i;
    }
    for (size_t i = first + 1; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        // (|y_f|/|x_f|)^{a_i} == (|y_i|/|x_i|)^{a_f}
        if (y[first].abs().pow_int(w[i]) * x[i].abs().pow_int(w[first]) !=
            y[i].abs().pow_int(w[first]) * x[first].abs().pow_int(w[i]))
            return false;
    }
    return true;
}

// A leaf gamma_x of the weighted homogeneous foliation, held as a seed point.
// The seed is normalized so that |seed_k| = 1 at the last nonzero index k
// whenever that normalization stays rational (always when a_k = 1, when k is
// the only nonzero coordinate, or when |seed_k| is a perfect a_k-th power);
// otherwise the reduced input seed is kept and equality goes through
// same_leaf, which is exact in every case.
struct Leaf {
    WeightVector weights;
    Point seed;

    friend bool operator==(const Leaf& a, const Leaf& b) {
        return a.weights == b.weights && same_leaf(a.weights, a.seed, b.seed);
    }
};

inline Leaf leaf_normal_form(const WeightVector& w, const Point& x) {
    if (x.size() != w.size()) raise(ErrorKind::Internal, "leaf_normal_form: dimension mismatch");
    if (is_zero_point(x)) raise(ErrorKind::ZeroPoint, "leaf through the origin");
    size_t k = detail::last_nonzero(x);
    bool only_k = true;
    for (size_t i = 0; i < k; ++i)
        if (!x[i].is_zero()) only_k = false;
    if (only_k) {
        Point seed(x.size(), Rational(0));
        seed[k] = Rational(x[k].sign());
        return Leaf{w, seed};
    }
    auto root = rational_pow(x[k].abs(), Rational(1, w[k]));
    if (root.has_value()) return Leaf{w, flow(w, x, root->inverse())};
    return Leaf{w, x};
}

// Contact order of two distinct leaves; always 1 or a Newton simplex
// direction a_i/a_j (i < j).
struct ContactOrder {
    Rational value;

    friend bool operator==(const ContactOrder& a, const ContactOrder& b) {
        return a.value == b.value;
    }
};

namespace detail {

inline Rational contact_rec(const WeightVector& w, const Point& x, const Point& y, size_t m) {
    if (m == 1) return Rational(1);  // two distinct rays on a line
    const Rational& xm = x[m - 1];
    const Rational& ym = y[m - 1];
    if (xm.is_zero() && ym.is_zero()) {
        WeightVector trimmed = validate_weights(
            std::vector<long long>(w.values().begin(), w.values().begin() + (m - 1)));
        return contact_rec(trimmed, x, y, m - 1);
    }
    if (xm.is_zero() != ym.is_zero()) return Rational(1);  // one tangent inside the hyperplane
    if (xm.sign() != ym.sign()) return Rational(1);        // opposite sides of the hyperplane
    // both on the same side: compare slice coordinates, smallest exponent wins
    bool found = false;
    Rational best;
    for (size_t i = 0; i + 1 < m; ++i) {
        if (slice_coordinates_equal(x[i], y[i], xm, ym, w[i], w[m - 1])) continue;
        Rational dir(w[i], w[m - 1]);
        if (!found || dir < best) {
            best = dir;
            found = true;
        }
    }
    if (!found) raise(ErrorKind::Internal, "contact recursion reached identical leaves");
    return best;
}

}  // namespace detail

inline ContactOrder leaf_contact_order(const WeightVector& w, const Point& x, const Point& y) {
    if (x.size() != w.size() || y.size() != w.size())
        raise(ErrorKind::Internal, "leaf_contact_order: dimension mismatch");
    if (is_zero_point(x) || is_zero_point(y))
        raise(ErrorKind::ZeroPoint, "contact order needs leaves away from the origin");
    if (same_leaf(w, x, y)) raise(ErrorKind::SameLeaf, "contact order of a leaf with itself");
    return ContactOrder{detail::contact_rec(w, x, y, w.size())};
}

// Seeds realizing contact order exactly a_i/a_j (1-based i < j).
inline std::pair<Point, Point> realizing_pair(const WeightVector& w, size_t i, size_t j) {
    if (i < 1 || j <= i || j > w.size())
        raise(ErrorKind::BadIndices,
              "need 1 <= i < j <= n, got i=" + std::to_string(i) + " j=" + std::to_string(j));
    Point x(w.size(), Rational(0)), y(w.size(), Rational(0));
    x[i - 1] = Rational(1);
    x[j - 1] = Rational(1);
    y[i - 1] = Rational(2);
    y[j - 1] = Rational(1);
    return {x, y};
}

}  // namespace whgeo
