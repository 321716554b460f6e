// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "whgeo/errors.hpp"
#include "whgeo/foliation.hpp"
#include "whgeo/holder_complex.hpp"
#include "whgeo/rational.hpp"
#include "whgeo/weights.hpp"

namespace whgeo {

// Multivariate polynomial with exact rational coefficients, canonicalized
// monomial list (sorted by exponent vector, like terms combined).
class WeightedPolynomial {
public:
    struct Monomial {
        Rational coeff;
        std::vector<long long> exps;
    };

    WeightedPolynomial(size_t nvars, std::vector<Monomial> monomials) : nvars_(nvars) {
        std::map<std::vector<long long>, Rational> combined;
        for (auto& m : monomials) {
            if (m.exps.size() != nvars_)
                raise(ErrorKind::Internal, "monomial arity mismatch");
            for (long long e : m.exps)
                if (e < 0) raise(ErrorKind::Internal, "negative exponent in polynomial");
            combined[m.exps] += m.coeff;
        }
        for (auto& [exps, coeff] : combined)
            if (!coeff.is_zero()) monomials_.push_back({coeff, exps});
    }

    size_t variable_count() const { return nvars_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }

    double eval(const std::vector<double>& x) const {
        double acc = 0.0;
        for (const auto& m : monomials_) {
            double term = m.coeff.to_double();
            for (size_t i = 0; i < nvars_; ++i)
                for (long long e = 0; e < m.exps[i]; ++e) term *= x[i];
            acc += term;
        }
        return acc;
    }

    WeightedPolynomial partial(size_t var) const {
        std::vector<Monomial> out;
        for (const auto& m : monomials_) {
            if (m.exps[var] == 0) continue;
            Monomial d = m;
            d.coeff = d.coeff * Rational(d.exps[var]);
            d.exps[var] -= 1;
            out.push_back(std::move(d));
        }
        return WeightedPolynomial(nvars_, std::move(out));
    }

    // restriction to the hyperplane x_last = 0 (drops the last variable)
    WeightedPolynomial restrict_last_to_zero() const {
        std::vector<Monomial> out;
        for (const auto& m : monomials_) {
            if (m.exps.back() != 0) continue;
            Monomial r;
            r.coeff = m.coeff;
            r.exps.assign(m.exps.begin(), m.exps.end() - 1);
            out.push_back(std::move(r));
        }
        return WeightedPolynomial(nvars_ - 1, std::move(out));
    }

    double max_abs_coeff() const {
        double mx = 0.0;
        for (const auto& m : monomials_) mx = std::max(mx, std::fabs(m.coeff.to_double()));
        return mx;
    }

    // canonical text form, parseable by the CLI grammar (n <= 3)
    std::string to_string() const {
        if (monomials_.empty()) return "0";
        std::string out;
        for (size_t mi = monomials_.size(); mi-- > 0;) {
            const auto& m = monomials_[mi];
            Rational c = m.coeff;
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            c = c.abs();
            bool has_vars = false;
            for (long long e : m.exps) has_vars |= e > 0;
            std::string factors;
            if (!c.is_one() || !has_vars) factors = c.to_string();
            for (size_t i = 0; i < nvars_; ++i) {
                if (m.exps[i] == 0) continue;
                if (!factors.empty()) factors += "*";
                factors += "x" + std::to_string(i + 1);
                if (m.exps[i] > 1) factors += "^" + std::to_string(m.exps[i]);
            }
            out += factors;
        }
        return out;
    }

    // renames variables: new variable i is old variable perm[i]
    WeightedPolynomial permuted(const std::vector<size_t>& perm) const {
        std::vector<Monomial> out;
        for (const auto& m : monomials_) {
            Monomial r;
            r.coeff = m.coeff;
            r.exps.resize(nvars_);
            for (size_t i = 0; i < nvars_; ++i) r.exps[i] = m.exps[perm[i]];
            out.push_back(std::move(r));
        }
        return WeightedPolynomial(nvars_, std::move(out));
    }

private:
    size_t nvars_;
    std::vector<Monomial> monomials_;
};

// common weighted degree, or the set of distinct degrees found
inline long long weighted_degree_check(const WeightedPolynomial& f, const WeightVector& w) {
    if (f.is_zero()) raise(ErrorKind::NotWeightedHomogeneous, "zero polynomial");
    if (f.variable_count() != w.size())
        raise(ErrorKind::NotWeightedHomogeneous, "weights/variables arity mismatch");
    std::set<long long> degrees;
    for (const auto& m : f.monomials()) {
        long long d = 0;
        for (size_t i = 0; i < w.size(); ++i) d += w[i] * m.exps[i];
        degrees.insert(d);
    }
    if (degrees.size() != 1) {
        std::string list;
        for (long long d : degrees) list += (list.empty() ? "" : ",") + std::to_string(d);
        raise(ErrorKind::NotWeightedHomogeneous, "distinct weighted degrees {" + list + "}");
    }
    return *degrees.begin();
}

// A weighted homogeneous polynomial surface germ in R^3.
struct SurfaceGerm {
    WeightedPolynomial f;
    WeightVector w;
    long long degree;

    static SurfaceGerm create(WeightedPolynomial f, WeightVector w) {
        if (f.variable_count() != 3 || w.size() != 3)
            raise(ErrorKind::Internal, "surface germs live in R^3");
        long long d = weighted_degree_check(f, w);
        return SurfaceGerm{std::move(f), std::move(w), d};
    }

    // test fixtures may need to bypass the degree validation
    static SurfaceGerm forge(WeightedPolynomial f, WeightVector w, long long degree) {
        return SurfaceGerm{std::move(f), std::move(w), degree};
    }
};

// f(t^{a_1}x_1, t^{a_2}x_2, t^{a_3}x_3) == t^d f(x), checked symbolically
// with t kept formal; a construction self-check (false only for forged germs)
inline bool flow_invariance_identity(const SurfaceGerm& s) {
    for (const auto& m : s.f.monomials()) {
        long long d = 0;
        for (size_t i = 0; i < 3; ++i) d += s.w[i] * m.exps[i];
        if (d != s.degree) return false;
    }
    return true;
}

// --- link tracing ------------------------------------------------------

struct SlicePolyline {
    std::vector<std::array<double, 2>> points;
    bool closed = false;
};

struct SliceResult {
    int slice_sign = 1;  // c = +1 or -1
    std::vector<SlicePolyline> components;
    double max_residual = 0.0;
    double box = 0.0;
    int grid = 0;
};

namespace detail {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

struct SegmentSoup {
    // crossing points keyed by grid edge; segments join two keys
    std::map<size_t, std::array<double, 2>> points;
    std::vector<std::pair<size_t, size_t>> segments;
};

// one marching-squares pass over an m x m node grid shifted by `offset`
// cells; returns nullopt when a node evaluates exactly to zero
inline std::optional<SegmentSoup> march_once(const SurfaceGerm& s, double c, double box, int m,
                                             double offset) {
    std::vector<double> xs(static_cast<size_t>(m));
    double step = 2.0 * box / (m - 1);
    for (int i = 0; i < m; ++i) xs[static_cast<size_t>(i)] = -box + step * i + offset * step;

    std::vector<double> vals(static_cast<size_t>(m) * m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            double v = s.f.eval({xs[static_cast<size_t>(i)], xs[static_cast<size_t>(j)], c});
            if (v == 0.0) return std::nullopt;
            vals[static_cast<size_t>(j) * m + i] = v;
        }

    SegmentSoup soup;
    auto node = [&](int i, int j) { return vals[static_cast<size_t>(j) * m + i]; };
    // edge keys: horizontal (i,j)-(i+1,j) even, vertical (i,j)-(i,j+1) odd
    auto hkey = [&](int i, int j) { return (static_cast<size_t>(j) * m + i) * 2; };
    auto vkey = [&](int i, int j) { return (static_cast<size_t>(j) * m + i) * 2 + 1; };
    auto cross = [&](double x0, double y0, double v0, double x1, double y1, double v1) {
        double f = v0 / (v0 - v1);
        return std::array<double, 2>{x0 + f * (x1 - x0), y0 + f * (y1 - y0)};
    };

    for (int j = 0; j + 1 < m; ++j) {
        for (int i = 0; i + 1 < m; ++i) {
            double bl = node(i, j), br = node(i + 1, j);
            double tr = node(i + 1, j + 1), tl = node(i, j + 1);
            int mask = (bl > 0) | ((br > 0) << 1) | ((tr > 0) << 2) | ((tl > 0) << 3);
            if (mask == 0 || mask == 15) continue;
            double x0 = xs[static_cast<size_t>(i)], x1 = xs[static_cast<size_t>(i) + 1];
            double y0 = xs[static_cast<size_t>(j)], y1 = xs[static_cast<size_t>(j) + 1];
            auto bottom = [&] { soup.points[hkey(i, j)] = cross(x0, y0, bl, x1, y0, br); return hkey(i, j); };
            auto top = [&] { soup.points[hkey(i, j + 1)] = cross(x0, y1, tl, x1, y1, tr); return hkey(i, j + 1); };
            auto left = [&] { soup.points[vkey(i, j)] = cross(x0, y0, bl, x0, y1, tl); return vkey(i, j); };
            auto right = [&] { soup.points[vkey(i + 1, j)] = cross(x1, y0, br, x1, y1, tr); return vkey(i + 1, j); };
            auto join = [&](size_t a, size_t b) { soup.segments.emplace_back(a, b); };
            switch (mask) {
                case 1: case 14: join(left(), bottom()); break;
                case 2: case 13: join(bottom(), right()); break;
                case 3: case 12: join(left(), right()); break;
                case 4: case 11: join(right(), top()); break;
                case 6: case 9: join(bottom(), top()); break;
                case 7: case 8: join(left(), top()); break;
                case 5: case 10: {
                    // saddle: resolve with the cell center sample
                    double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
                    bool center_pos = s.f.eval({cx, cy, c}) > 0;
                    bool same_as_bl = (mask == 5) == center_pos;
                    if (same_as_bl) {
                        join(left(), top());
                        join(bottom(), right());
                    } else {
                        join(left(), bottom());
                        join(right(), top());
                    }
                    break;
                }
                default: break;
            }
        }
    }
    return soup;
}

}  // namespace detail

// Marching-squares extraction of {f(x1, x2, c) = 0} over [-B, B]^2 on an
// m x m node grid. Crossings are linked into polylines; components come from
// union-find over the shared grid-edge keys.
inline SliceResult slice_curve(const SurfaceGerm& s, int slice_sign, double box, int m) {
    if (m < 16) raise(ErrorKind::Usage, "grid resolution must be at least 16");
    if (!(box > 0)) raise(ErrorKind::Usage, "box half-width must be positive");
    double c = slice_sign >= 0 ? 1.0 : -1.0;

    auto soup = detail::march_once(s, c, box, m, 0.0);
    if (!soup) soup = detail::march_once(s, c, box, m, 1.0 / 3.0);
    if (!soup)
        raise(ErrorKind::GridDegenerate,
              "grid node evaluates exactly to zero, with and without the 1/3-cell offset");

    double step = 2.0 * box / (m - 1);
    for (const auto& [key, p] : soup->points) {
        if (std::fabs(p[0]) > box - 1.5 * step || std::fabs(p[1]) > box - 1.5 * step)
            raise(ErrorKind::BoxTooSmall, "curve reaches the sampling box boundary");
    }

    // component labels via union-find on crossing keys
    std::map<size_t, size_t> index;
    for (const auto& [key, p] : soup->points) {
        size_t next = index.size();
        index[key] = next;
    }
    detail::UnionFind uf(index.size());
    std::map<size_t, std::vector<std::pair<size_t, size_t>>> adj;  // key -> (segment, other)
    for (size_t si = 0; si < soup->segments.size(); ++si) {
        auto [a, b] = soup->segments[si];
        uf.unite(index[a], index[b]);
        adj[a].push_back({si, b});
        adj[b].push_back({si, a});
    }

    SliceResult out;
    out.slice_sign = slice_sign >= 0 ? 1 : -1;
    out.box = box;
    out.grid = m;

    std::set<size_t> assigned;
    std::vector<bool> seg_used(soup->segments.size(), false);
    for (const auto& [key, deg] : adj) {
        if (assigned.count(key)) continue;
        // collect this component's keys
        std::vector<size_t> keys;
        size_t root = uf.find(index[key]);
        for (const auto& [k2, d2] : adj)
            if (uf.find(index[k2]) == root) keys.push_back(k2);
        for (size_t k2 : keys) assigned.insert(k2);
        // walk from an endpoint (degree 1) if there is one, else any key
        size_t start = keys.front();
        for (size_t k2 : keys)
            if (adj[k2].size() == 1) {
                start = k2;
                break;
            }
        SlicePolyline line;
        size_t cur = start;
        line.points.push_back(soup->points[cur]);
        while (true) {
            bool advanced = false;
            for (auto [si, other] : adj[cur]) {
                if (seg_used[si]) continue;
                seg_used[si] = true;
                cur = other;
                line.points.push_back(soup->points[cur]);
                advanced = true;
                break;
            }
            if (!advanced) break;
        }
        double dx = line.points.front()[0] - line.points.back()[0];
        double dy = line.points.front()[1] - line.points.back()[1];
        double gap = std::sqrt(dx * dx + dy * dy);
        line.closed = gap <= step * std::sqrt(2.0) * 1.0001;
        out.components.push_back(std::move(line));
    }

    for (const auto& comp : out.components)
        for (const auto& p : comp.points)
            out.max_residual = std::max(out.max_residual, std::fabs(s.f.eval({p[0], p[1], c})));
    return out;
}

// Decides whether {f(x1, x2, 0) = 0} meets the punctured plane. Weighted
// homogeneity scales any zero onto the unit circle's flow trace, so sampling
// g(theta) = f(cos, sin, 0) suffices: a strict sign change means nontrivial,
// all-one-strict-sign means trivial, a dip below tolerance without a sign
// change is Inconclusive.
inline bool origin_slice_trivial(const SurfaceGerm& s, int probe = 720) {
    if (probe < 8) raise(ErrorKind::Usage, "angular probe resolution too small");
    WeightedPolynomial g = s.f.restrict_last_to_zero();
    if (g.is_zero()) return false;  // the whole plane {x3=0} lies in X
    double tol = 1e-9 * (1.0 + g.max_abs_coeff());
    bool pos = false, neg = false;
    double min_abs = std::numeric_limits<double>::infinity();
    double min_theta = 0.0;
    constexpr double kTwoPi = 6.283185307179586476;
    for (int k = 0; k < probe; ++k) {
        double theta = kTwoPi * k / probe;
        double v = g.eval({std::cos(theta), std::sin(theta)});
        if (std::fabs(v) < min_abs) {
            min_abs = std::fabs(v);
            min_theta = theta;
        }
        if (v > tol) pos = true;
        if (v < -tol) neg = true;
    }
    if (pos && neg) return false;  // sign change: zeros on the punctured plane
    if (min_abs <= tol)
        raise(ErrorKind::Inconclusive, "|g| dips to " + std::to_string(min_abs) +
                                           " at theta = " + std::to_string(min_theta) +
                                           " without a sign change");
    return true;
}

// continued-fraction rationalization with bounded denominator
inline Rational snap_rational(double x, long long max_den = 1000000) {
    if (!std::isfinite(x)) raise(ErrorKind::Internal, "cannot snap a non-finite value");
    bool neg = x < 0;
    double v = std::fabs(x);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e17) break;
        long long a = static_cast<long long>(fl);
        if (q1 * a + q0 > max_den) break;
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) raise(ErrorKind::Internal, "value out of snapping range: " + std::to_string(x));
    Rational r(p1, q1);
    return neg ? -r : r;
}

// point of the slice {x3 = c} to the leaf through it (seed rationalized)
inline Leaf slice_to_leaf(const WeightVector& w, const std::array<double, 2>& p, int slice_sign,
                          long long snap_den = 1000000) {
    Point seed = {snap_rational(p[0], snap_den), snap_rational(p[1], snap_den),
                  Rational(slice_sign >= 0 ? 1 : -1)};
    return leaf_normal_form(w, seed);
}

// Minimum pairwise contact order over sampled leaves of one link component.
// A component squeezed into a line {x2 = r} stays a line in every slice
// (homogeneity scales it) and cannot bound a closed surface; it is rejected
// with the witness rather than producing a spurious a1/a3.
inline Rational component_exponent(const WeightVector& w, const SlicePolyline& component,
                                   int slice_sign, int samples = 12,
                                   long long snap_den = 1000000) {
    if (samples < 8) raise(ErrorKind::Usage, "need at least 8 samples");
    if (component.points.size() < 2) raise(ErrorKind::TooFewPoints, "component has < 2 points");

    double mean = 0.0;
    for (const auto& p : component.points) mean += p[1];
    mean /= static_cast<double>(component.points.size());
    double var = 0.0;
    for (const auto& p : component.points) var += (p[1] - mean) * (p[1] - mean);
    var /= static_cast<double>(component.points.size());
    if (var < 1e-9)
        raise(ErrorKind::Degenerate,
              "component lies in the line x2 = " + std::to_string(mean));

    // well-spread picks by cumulative arc length
    std::vector<double> cum(component.points.size(), 0.0);
    for (size_t i = 1; i < component.points.size(); ++i) {
        double dx = component.points[i][0] - component.points[i - 1][0];
        double dy = component.points[i][1] - component.points[i - 1][1];
        cum[i] = cum[i - 1] + std::sqrt(dx * dx + dy * dy);
    }
    double total = cum.back();
    std::vector<Leaf> leaves;
    size_t pos = 0;
    for (int k = 0; k < samples; ++k) {
        double target = total * k / samples;
        while (pos + 1 < cum.size() && cum[pos] < target) ++pos;
        Leaf leaf = slice_to_leaf(w, component.points[pos], slice_sign, snap_den);
        bool dup = false;
        for (const auto& other : leaves)
            if (other.seed == leaf.seed) dup = true;
        if (!dup) leaves.push_back(std::move(leaf));
    }
    if (leaves.size() < 2)
        raise(ErrorKind::TooFewPoints, "fewer than two distinct leaves after rationalization");

    std::optional<Rational> best;
    for (size_t i = 0; i < leaves.size(); ++i)
        for (size_t j = i + 1; j < leaves.size(); ++j) {
            if (same_leaf(w, leaves[i].seed, leaves[j].seed)) continue;
            Rational lam = leaf_contact_order(w, leaves[i].seed, leaves[j].seed).value;
            if (!best || lam < *best) best = lam;
        }
    if (!best) raise(ErrorKind::TooFewPoints, "all samples landed on one leaf");
    return *best;
}

// --- horn exponent pipeline ---------------------------------------------

struct HornOptions {
    int grid = 256;
    double box = 2.0;
    int probe = 720;
    int samples = 12;
    long long snap_den = 1000000;
    double max_box = 1024.0;
};

struct ComponentReport {
    int slice_sign = 1;
    bool closed = false;
    size_t point_count = 0;
    std::optional<Rational> beta;
    bool degenerate = false;
    std::string note;
};

struct HornReport {
    bool applicable = false;
    std::vector<std::string> reasons;
    bool origin_slice_trivial = false;
    int link_component_count = 0;
    std::vector<ComponentReport> components;
    std::optional<Rational> beta;  // uniform exponent when defined
    double min_gradient_norm = std::numeric_limits<double>::infinity();
    bool gradient_evidence = false;
    double max_residual = 0.0;
    double box_used = 0.0;
};

namespace detail {

// Doubling sweep up to the cap. A zero set can sit entirely outside a small
// box without touching its boundary, so "no crossings" at one box proves
// nothing; the sweep extracts at the smallest box attaining the maximal
// component count and only reports an empty slice after scanning the cap.
inline SliceResult slice_with_growth(const SurfaceGerm& s, int sign, const HornOptions& opt) {
    std::optional<SliceResult> best;
    std::optional<SliceResult> widest_empty;
    double limit = std::max(opt.max_box, opt.box);
    for (double box = opt.box; box <= limit; box *= 2) {
        SliceResult r;
        try {
            r = slice_curve(s, sign, box, opt.grid);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BoxTooSmall) throw;
            continue;  // touches this boundary; a wider box may clear it
        }
        if (r.components.empty())
            widest_empty = std::move(r);
        else if (!best || r.components.size() > best->components.size())
            best = std::move(r);
    }
    if (best) return *best;
    if (widest_empty) return *widest_empty;
    raise(ErrorKind::BoxTooSmall,
          "curve touches the sampling boundary at every box up to " + std::to_string(limit));
}

}  // namespace detail

// Traced link of the germ: both slice curves plus the rationalization bound
// that downstream leaf snapping uses.
struct LinkSample {
    SliceResult plus;
    SliceResult minus;
    long long snap_denominator = 1000000;

    size_t component_count() const {
        return plus.components.size() + minus.components.size();
    }
    double max_residual() const { return std::max(plus.max_residual, minus.max_residual); }
    double box_used() const { return std::max(plus.box, minus.box); }
};

inline LinkSample trace_link(const SurfaceGerm& s, const HornOptions& opt = {}) {
    return LinkSample{detail::slice_with_growth(s, +1, opt),
                      detail::slice_with_growth(s, -1, opt), opt.snap_den};
}

inline HornReport horn_exponent(const SurfaceGerm& s, const HornOptions& opt = {}) {
    HornReport report;
    report.origin_slice_trivial = origin_slice_trivial(s, opt.probe);

    if (!report.origin_slice_trivial) {
        // X meets {x3 = 0} away from 0: beta(X, 0) = 1. The slices x3 = +/-1
        // are unbounded in this case, so no link tracing happens here.
        report.beta = Rational(1);
        report.applicable = true;
        report.reasons.push_back("origin slice nontrivial: beta = 1");
        report.reasons.push_back(
            "horn model additionally assumes a connected link and an isolated singular point");
        report.reasons.push_back("link not traced: slices are unbounded when X meets {x3 = 0}");
        return report;
    }

    LinkSample link = trace_link(s, opt);
    const SliceResult& plus = link.plus;
    const SliceResult& minus = link.minus;
    report.box_used = link.box_used();
    report.max_residual = link.max_residual();
    report.link_component_count = static_cast<int>(link.component_count());

    // isolated-singularity evidence: |grad f| on sampled link points (an
    // incomplete numeric check, reported as such)
    WeightedPolynomial fx = s.f.partial(0), fy = s.f.partial(1), fz = s.f.partial(2);
    for (const SliceResult* slice : {&plus, &minus}) {
        double c = slice->slice_sign > 0 ? 1.0 : -1.0;
        for (const auto& comp : slice->components)
            for (const auto& p : comp.points) {
                double gx = fx.eval({p[0], p[1], c});
                double gy = fy.eval({p[0], p[1], c});
                double gz = fz.eval({p[0], p[1], c});
                report.min_gradient_norm = std::min(
                    report.min_gradient_norm, std::sqrt(gx * gx + gy * gy + gz * gz));
            }
    }
    report.gradient_evidence =
        std::isfinite(report.min_gradient_norm) && report.min_gradient_norm > 1e-6;

    report.reasons.push_back("origin slice trivial: X meets {x3 = 0} only at 0");
    if (report.link_component_count == 0) {
        report.applicable = false;
        report.reasons.push_back("empty link: surface germ is {0}");
        return report;
    }

    Rational generic(s.w[1], s.w[2]);  // a2/a3
    bool connected = report.link_component_count == 1;
    if (connected)
        report.reasons.push_back("connected link: beta = a2/a3 = " + generic.to_string());

    bool all_ok = true;
    std::optional<Rational> uniform;
    bool uniform_ok = true;
    for (const SliceResult* slice : {&plus, &minus}) {
        for (const auto& comp : slice->components) {
            ComponentReport cr;
            cr.slice_sign = slice->slice_sign;
            cr.closed = comp.closed;
            cr.point_count = comp.points.size();
            if (!comp.closed) {
                cr.note = "open polyline: boundary effects or non-isolated singularity";
                all_ok = false;
            } else {
                try {
                    cr.beta = component_exponent(s.w, comp, slice->slice_sign, opt.samples,
                                                 opt.snap_den);
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::Degenerate) throw;
                    cr.degenerate = true;
                    cr.note = e.what();
                    all_ok = false;
                }
            }
            if (cr.beta) {
                if (!uniform)
                    uniform = cr.beta;
                else if (*uniform != *cr.beta)
                    uniform_ok = false;
            } else {
                uniform_ok = false;
            }
            report.components.push_back(std::move(cr));
        }
    }
    if (uniform && uniform_ok) report.beta = uniform;
    if (connected && uniform && *uniform != generic)
        report.reasons.push_back("warning: sampled exponent disagrees with a2/a3");
    report.applicable = all_ok;
    if (!connected)
        report.reasons.push_back(
            "link is disconnected: each closed component reported as its own horn germ");
    if (!report.gradient_evidence)
        report.reasons.push_back("gradient check below threshold: isolated singularity not "
                                 "evidenced (check is numeric and incomplete)");
    return report;
}

// Canonical Hoelder complex of the germ: one loop-vertex pair of parallel
// edges per closed link component, both carrying the component's exponent.
inline HolderComplex complex_of_surface(const SurfaceGerm& s, const HornOptions& opt = {}) {
    if (!origin_slice_trivial(s, opt.probe))
        raise(ErrorKind::OriginSliceNontrivial,
              "X meets {x3 = 0} beyond the origin; the canonical complex needs the "
              "stratification machinery that is out of scope");
    LinkSample link = trace_link(s, opt);

    auto dirs = simplex_directions(s.w);
    std::vector<std::string> verts;
    std::vector<HolderComplex::Edge> edges;
    size_t idx = 0;
    for (const SliceResult* slice : {&link.plus, &link.minus}) {
        for (const auto& comp : slice->components) {
            if (!comp.closed)
                raise(ErrorKind::OpenComponent,
                      "open link polyline in slice x3 = " + std::to_string(slice->slice_sign));
            Rational beta = component_exponent(s.w, comp, slice->slice_sign, opt.samples,
                                               opt.snap_den);
            if (beta != Rational(1) && !std::binary_search(dirs.begin(), dirs.end(), beta))
                raise(ErrorKind::Internal, "component exponent escapes the direction set");
            std::string tag = "c" + std::to_string(idx++);
            verts.push_back(tag + "a");
            verts.push_back(tag + "b");
            edges.push_back({tag + "e0", tag + "a", tag + "b", beta});
            edges.push_back({tag + "e1", tag + "a", tag + "b", beta});
        }
    }
    return canonicalize(HolderComplex(std::move(verts), std::move(edges)));
}

}  // namespace whgeo
