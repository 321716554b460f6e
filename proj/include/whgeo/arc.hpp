// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "whgeo/errors.hpp"
#include "whgeo/foliation.hpp"
#include "whgeo/qext.hpp"
#include "whgeo/series.hpp"

namespace whgeo {

// Semialgebraic arc at a base point, one truncated fractional-power series
// per coordinate (offsets from the base, exponents > 0). A missing
// truncation order means the arc is exact (a fractional-power polynomial
// curve, e.g. a foliation leaf).
class PuiseuxArc {
public:
    PuiseuxArc(Point base, std::vector<Series<Rational>> coords,
               std::optional<Rational> truncation = std::nullopt)
        : base_(std::move(base)), coords_(std::move(coords)), truncation_(std::move(truncation)) {
        if (coords_.empty()) raise(ErrorKind::Internal, "arc needs at least one coordinate");
        if (base_.empty()) base_.assign(coords_.size(), Rational(0));
        if (base_.size() != coords_.size())
            raise(ErrorKind::Internal, "arc base dimension mismatch");
        bool any = false;
        for (auto& c : coords_) {
            c = series::truncated(c, truncation_);
            if (!c.terms.empty()) {
                if (c.terms.front().exp.sign() <= 0)
                    raise(ErrorKind::NonPositiveExponent,
                          "arc exponents must be positive, got " +
                              c.terms.front().exp.to_string());
                any = true;
            }
        }
        if (!any) raise(ErrorKind::ZeroPoint, "arc has no nonzero coordinate to its order");
    }

    const Point& base() const { return base_; }
    const std::vector<Series<Rational>>& coords() const { return coords_; }
    const std::optional<Rational>& truncation_order() const { return truncation_; }
    size_t dimension() const { return coords_.size(); }

private:
    Point base_;
    std::vector<Series<Rational>> coords_;
    std::optional<Rational> truncation_;
};

// nu(||gamma(s) - x0||_max) = min leading exponent over coordinates
inline Rational arc_valuation(const PuiseuxArc& arc) {
    std::optional<Rational> v;
    for (const auto& c : arc.coords()) {
        auto cv = c.valuation();
        if (cv && (!v || *cv < *v)) v = cv;
    }
    return *v;  // nonzero coordinate guaranteed by construction
}

// s = u^q: multiplies every exponent (and the truncation) by q
inline PuiseuxArc substitute_power(const PuiseuxArc& arc, const Rational& q) {
    if (q.sign() <= 0) raise(ErrorKind::Internal, "substitute_power needs q > 0");
    std::vector<Series<Rational>> coords;
    coords.reserve(arc.coords().size());
    for (const auto& c : arc.coords()) coords.push_back(series::power_substitute(c, q));
    std::optional<Rational> trunc;
    if (arc.truncation_order()) trunc = *arc.truncation_order() * q;
    return PuiseuxArc(arc.base(), std::move(coords), std::move(trunc));
}

namespace detail {

// |f| as a germ at 0+: flip the sign when the leading coefficient is negative
inline Series<Rational> abs_germ(const Series<Rational>& s) {
    if (!s.terms.empty() && s.terms.front().coeff.sign() < 0) return series::negate(s);
    return s;
}

// max(f, g) as a germ at 0+ for germs that are eventually comparable; when
// the two agree up to the common validity order the max is only known that far
inline Series<Rational> germ_max(const Series<Rational>& a, const Series<Rational>& b) {
    Series<Rational> d = series::sub(a, b);
    if (d.terms.empty()) return series::truncated(a, d.order);
    return d.terms.front().coeff.sign() > 0 ? a : b;
}

// max-norm distance series ||gamma(s) - x0||_max of the arc germ
inline Series<Rational> distance_series(const PuiseuxArc& arc) {
    std::optional<Series<Rational>> acc;
    for (const auto& c : arc.coords()) {
        if (c.terms.empty() && !c.order) continue;  // exactly zero coordinate
        Series<Rational> a = abs_germ(c);
        acc = acc ? germ_max(*acc, a) : a;
    }
    if (!acc) raise(ErrorKind::Internal, "distance series of the zero arc");
    return *acc;
}

inline long long lcm_ll(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

// lcm of exponent denominators across the arc's coordinate series
inline long long exponent_denominator_lcm(const PuiseuxArc& arc) {
    long long n = 1;
    for (const auto& c : arc.coords())
        for (const auto& t : c.terms) {
            if (!t.exp.den().fits_int64())
                raise(ErrorKind::Internal, "exponent denominator exceeds 2^63");
            n = lcm_ll(n, t.exp.den().to_int64());
        }
    return n;
}

inline Series<QExt> lift(const Series<Rational>& s) {
    Series<QExt> r;
    r.order = s.order;
    r.terms.reserve(s.terms.size());
    for (const auto& t : s.terms) r.terms.push_back({t.exp, QExt(t.coeff)});
    return r;
}

template <class K>
bool series_equal(const Series<K>& a, const Series<K>& b) {
    if (a.order != b.order || a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].exp != b.terms[i].exp || !(a.terms[i].coeff == b.terms[i].coeff))
            return false;
    return true;
}

}  // namespace detail

// Reparametrizes the arc by max-norm distance: output gamma~ satisfies
// ||gamma~(t) - x0||_max = t exactly through exponents <= order. The
// computation is exact over Q; when the inverse series' coefficients leave Q
// (leading distance coefficient without the needed rational root) it raises
// CoefficientNotRational rather than approximating.
inline PuiseuxArc distance_reparametrize(const PuiseuxArc& arc, const Rational& order) {
    if (order.sign() <= 0) raise(ErrorKind::Internal, "requested order must be positive");
    Series<Rational> d = detail::distance_series(arc);
    if (d.terms.empty())
        raise(ErrorKind::InsufficientOrder,
              "distance series is unresolved at the arc's truncation order");
    Rational q = *d.valuation();
    if (arc.truncation_order() && order > *arc.truncation_order() / q)
        raise(ErrorKind::InsufficientOrder,
              "requested order " + order.to_string() + " exceeds truncation/valuation = " +
                  (*arc.truncation_order() / q).to_string());

    PuiseuxArc flat = substitute_power(arc, q.inverse());
    Series<Rational> d1 = series::power_substitute(d, q.inverse());  // valuation 1 now
    auto [v1, c, w] = series::unit_decompose(d1);

    // invert t = d1(u) by Newton iteration on series (the correct order
    // roughly doubles each step), starting from the leading term u0 = t/c
    Series<Rational> t_mono = series::monomial<Rational>(Rational(1), Rational(1));
    Series<Rational> d1p = series::derivative(d1);
    Series<Rational> u = series::monomial<Rational>(c.inverse(), Rational(1), order);
    for (int iter = 0;; ++iter) {
        if (iter > 64) raise(ErrorKind::Internal, "series inversion did not stabilize");
        Series<Rational> residual =
            series::sub(series::compose_fractional(d1, u, order), t_mono);
        if (residual.terms.empty()) break;
        Series<Rational> slope = series::compose_fractional(d1p, u, order);
        u = series::truncated(series::sub(u, series::divide(residual, slope, order)), order);
    }

    std::vector<Series<Rational>> coords;
    coords.reserve(flat.coords().size());
    std::optional<Rational> achieved;
    for (const auto& coord : flat.coords()) {
        Series<Rational> composed = series::compose_fractional(coord, u, order);
        achieved = series::min_order(achieved, composed.order);
        coords.push_back(std::move(composed));
    }
    if (achieved && *achieved < order)
        raise(ErrorKind::InsufficientOrder, "cancellation exhausts known terms at order " +
                                                achieved->to_string() + " before requested " +
                                                order.to_string());
    return PuiseuxArc(arc.base(), std::move(coords), order);
}

namespace detail {

struct ContactDiff {
    std::optional<Rational> min_valuation;      // min over coords of first difference
    std::optional<Rational> blind_order;        // min order among coords with no visible diff
};

// difference analysis of A(s) and B(phi(s)) where d_B(phi) = d_A
template <class K>
ContactDiff collect_diff(const std::vector<Series<K>>& a, const std::vector<Series<K>>& b) {
    ContactDiff out;
    for (size_t i = 0; i < a.size(); ++i) {
        Series<K> d = series::sub(a[i], b[i]);
        if (!d.terms.empty()) {
            Rational v = d.terms.front().exp;
            if (!out.min_valuation || v < *out.min_valuation) out.min_valuation = v;
        } else if (d.order) {
            if (!out.blind_order || *d.order < *out.blind_order) out.blind_order = *d.order;
        }
    }
    return out;
}

// One attempt at the contact valuation with a given working order (in the
// parameter of arc A). Returns the s-valuation of ||A - B o phi||_max, or
// nullopt when the arcs agree through every trustworthy exponent.
inline std::optional<Rational> contact_attempt(const PuiseuxArc& A, const PuiseuxArc& B,
                                               const Series<Rational>& dA,
                                               const Series<Rational>& dB,
                                               const Rational& target) {
    // fast path: identical distance series, phi = id
    Series<Rational> dmatch = series::sub(dA, dB);
    if (dmatch.terms.empty()) {
        std::vector<Series<Rational>> a, b;
        for (size_t i = 0; i < A.coords().size(); ++i) {
            a.push_back(series::truncated(A.coords()[i], dmatch.order));
            b.push_back(series::truncated(B.coords()[i], dmatch.order));
        }
        ContactDiff diff = collect_diff(a, b);
        if (diff.min_valuation && (!diff.blind_order || *diff.min_valuation <= *diff.blind_order))
            return diff.min_valuation;
        return std::nullopt;
    }

    auto [qA, CA, wA] = series::unit_decompose(dA);
    auto [qB, CB, wB] = series::unit_decompose(dB);

    long long N = exponent_denominator_lcm(B);
    Rational Mr = qB * Rational(N);
    if (!Mr.is_integer()) raise(ErrorKind::Internal, "distance valuation outside exponent lattice");
    long long M = Mr.num().to_int64();

    auto fld = RadicalField::make(CA / CB, M);
    QExt theta = QExt::theta(fld);

    // initial guess: psi0 = (dA / CB)^{1/M} = theta * s^{qA/M} * (1 + wA)^{1/M}
    Series<QExt> unitA = series::unit_pow(lift(wA), Rational(1, M), target);
    Series<QExt> psi =
        series::truncated(series::shift(series::scale(unitA, theta), qA / Rational(M)),
                          std::optional<Rational>(target));

    // solve D(psi) = dA for psi = phi^{1/N}, where D(psi) = dB(psi^N) has
    // integer exponents; Newton doubles the matched order per step
    std::vector<std::pair<long long, QExt>> dbTerms, dbDerivTerms;
    for (const auto& t : dB.terms) {
        Rational ie = t.exp * Rational(N);
        if (!ie.is_integer()) raise(ErrorKind::Internal, "exponent lattice violation in dB");
        long long e = ie.num().to_int64();
        dbTerms.push_back({e, QExt(t.coeff)});
        dbDerivTerms.push_back({e - 1, QExt(Rational(e) * t.coeff)});
    }
    std::optional<Rational> dB_cap;
    if (dB.order) dB_cap = *dB.order * (qA / qB);
    Series<QExt> dA_lift = lift(series::truncated(dA, std::optional<Rational>(target)));
    for (int iter = 0;; ++iter) {
        if (iter > 64) raise(ErrorKind::Internal, "contact reparametrization did not stabilize");
        Series<QExt> value = series::eval_int_powers(dbTerms, psi, std::optional<Rational>(target));
        if (dB_cap) value = series::truncated(value, dB_cap);
        Series<QExt> resid = series::sub(value, dA_lift);
        if (resid.terms.empty()) break;
        Series<QExt> slope =
            series::eval_int_powers(dbDerivTerms, psi, std::optional<Rational>(target));
        psi = series::truncated(series::sub(psi, series::divide(resid, slope, target)),
                                std::optional<Rational>(target));
    }

    std::vector<Series<QExt>> a, b;
    for (size_t i = 0; i < A.coords().size(); ++i) {
        a.push_back(series::truncated(lift(A.coords()[i]), std::optional<Rational>(target)));
        std::vector<std::pair<long long, QExt>> terms;
        for (const auto& t : B.coords()[i].terms) {
            Rational ie = t.exp * Rational(N);
            if (!ie.is_integer()) raise(ErrorKind::Internal, "exponent lattice violation");
            terms.push_back({ie.num().to_int64(), QExt(t.coeff)});
        }
        Series<QExt> composed = series::eval_int_powers(terms, psi, std::optional<Rational>(target));
        if (B.coords()[i].order) {
            // unknown tail of coordinate i enters at its order mapped to s-scale
            composed = series::truncated(
                composed, std::optional<Rational>(*B.coords()[i].order * (qA / qB)));
        }
        b.push_back(std::move(composed));
    }
    ContactDiff diff = collect_diff(a, b);
    if (diff.min_valuation && (!diff.blind_order || *diff.min_valuation <= *diff.blind_order))
        return diff.min_valuation;
    return std::nullopt;
}

}  // namespace detail

// Order of contact of two arcs at the same base point: both are brought to a
// common max-norm distance parametrization (the second arc is reparametrized
// by the first arc's distance series; one radical extension Q(theta) covers
// the coefficients) and the leading exponent of the difference is read off,
// exactly: the result is nu(||g1~(t) - g2~(t)||_max) for the two
// distance-parametrized arcs.
inline Rational symbolic_contact_order(const PuiseuxArc& A, const PuiseuxArc& B) {
    if (A.dimension() != B.dimension())
        raise(ErrorKind::BaseMismatch, "arcs live in different dimensions");
    for (size_t i = 0; i < A.base().size(); ++i)
        if (A.base()[i] != B.base()[i])
            raise(ErrorKind::BaseMismatch, "arcs have different base points");

    Series<Rational> dA = detail::distance_series(A);
    Series<Rational> dB = detail::distance_series(B);
    if (dA.terms.empty() || dB.terms.empty())
        raise(ErrorKind::InsufficientOrder,
              "distance series unresolved at the supplied truncation order");
    Rational qA = *dA.valuation();
    Rational qB = *dB.valuation();

    Rational max_exp(1);
    for (const auto& c : A.coords())
        for (const auto& t : c.terms) max_exp = std::max(max_exp, t.exp);
    for (const auto& c : B.coords())
        for (const auto& t : c.terms) max_exp = std::max(max_exp, t.exp * (qA / qB));

    // most differences surface at low exponents (the difference valuation is
    // lambda * qA with small lambda); escalate only when the arcs keep agreeing
    Rational full = (max_exp + qA) * Rational(4);
    Rational target = std::min(qA * Rational(4), full);
    while (true) {
        auto v = detail::contact_attempt(A, B, dA, dB, target);
        if (v) {
            Rational lambda = *v / qA;
            if (lambda < Rational(1))
                raise(ErrorKind::Internal, "contact order below 1: " + lambda.to_string());
            return lambda;
        }
        if (target == full) break;
        target = std::min(target * Rational(4), full);
    }
    raise(ErrorKind::IndistinguishableToOrder,
          "arcs agree through every exponent resolved at the available order; supply deeper "
          "truncations or distinct arcs");
}

// The leaf closure as an exact monomial arc: flow parametrization with
// exponents divided by the last nonzero weight, (x_1 t^{a_1/a_k}, ..., x_k t,
// 0, ..., 0). With a normalized seed this is already the max-norm distance
// parametrization; otherwise the contact engine renormalizes internally.
inline PuiseuxArc leaf_as_arc(const WeightVector& w, const Leaf& leaf,
                              std::optional<Rational> order = std::nullopt) {
    const Point& seed = leaf.seed;
    if (is_zero_point(seed)) raise(ErrorKind::ZeroPoint, "leaf with zero seed");
    size_t k = detail::last_nonzero(seed);
    std::vector<Series<Rational>> coords;
    coords.reserve(seed.size());
    for (size_t i = 0; i < seed.size(); ++i) {
        if (i > k || seed[i].is_zero()) {
            coords.push_back(series::zero<Rational>(order));
        } else {
            coords.push_back(series::monomial<Rational>(seed[i], Rational(w[i], w[k]), order));
        }
    }
    return PuiseuxArc(Point(seed.size(), Rational(0)), std::move(coords), order);
}

// The isosceles property at the arc level: among the three pairwise
// contact orders the minimum is attained at least twice.
inline bool ultrametric_check(const PuiseuxArc& a, const PuiseuxArc& b, const PuiseuxArc& c) {
    Rational ab = symbolic_contact_order(a, b);
    Rational bc = symbolic_contact_order(b, c);
    Rational ac = symbolic_contact_order(a, c);
    Rational mn = std::min({ab, bc, ac});
    int hits = (ab == mn) + (bc == mn) + (ac == mn);
    return hits >= 2;
}

}  // namespace whgeo
