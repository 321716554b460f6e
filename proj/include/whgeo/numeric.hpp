// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "whgeo/arc.hpp"
#include "whgeo/errors.hpp"
#include "whgeo/foliation.hpp"

namespace whgeo {

enum class NormKind { Euclidean, Max, L1 };

inline NormKind norm_from_string(const std::string& s) {
    if (s == "euclidean") return NormKind::Euclidean;
    if (s == "max") return NormKind::Max;
    if (s == "l1") return NormKind::L1;
    raise(ErrorKind::Usage, "unknown norm '" + s + "' (euclidean|max|l1)");
}

inline const char* norm_name(NormKind k) {
    switch (k) {
        case NormKind::Euclidean: return "euclidean";
        case NormKind::Max: return "max";
        case NormKind::L1: return "l1";
    }
    return "?";
}

inline double evaluate_norm(const std::vector<double>& v, NormKind kind) {
    double acc = 0.0;
    switch (kind) {
        case NormKind::Euclidean:
            for (double x : v) acc += x * x;
            return std::sqrt(acc);
        case NormKind::Max:
            for (double x : v) acc = std::max(acc, std::fabs(x));
            return acc;
        case NormKind::L1:
            for (double x : v) acc += std::fabs(x);
            return acc;
    }
    return acc;
}

inline std::vector<double> point_to_double(const Point& p) {
    std::vector<double> v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = p[i].to_double();
    return v;
}

// Samples points of an arc at prescribed distances from the base: the curve
// is evaluated in its own parameter and the parameter matching a target
// distance is found by monotone bisection on a bracket near 0.
class ArcSampler {
public:
    using Curve = std::function<std::vector<double>(double)>;

    ArcSampler(Curve curve, std::vector<double> base)
        : curve_(std::move(curve)), base_(std::move(base)) {}

    const std::vector<double>& base() const { return base_; }

    std::vector<double> at_distance(double t, NormKind norm) const {
        if (!(t > 0)) raise(ErrorKind::BisectionFailure, "target distance must be positive");
        double hi = t;
        int grow = 0;
        while (distance(hi, norm) < t) {
            hi *= 2.0;
            if (++grow > 600) raise(ErrorKind::BisectionFailure, "no bracket reaches distance");
        }
        // monotonicity spot-check on the bracket
        double quarter = distance(hi * 0.25, norm);
        double half = distance(hi * 0.5, norm);
        double full = distance(hi, norm);
        if (quarter > half * (1 + 1e-9) || half > full * (1 + 1e-9))
            raise(ErrorKind::BisectionFailure, "distance is not monotone on the bracket");
        double lo = 0.0;
        for (int iter = 0; iter < 200 && (hi - lo) > 1e-15 * hi; ++iter) {
            double mid = 0.5 * (lo + hi);
            (distance(mid, norm) < t ? lo : hi) = mid;
        }
        return curve_(0.5 * (lo + hi));
    }

private:
    double distance(double s, NormKind norm) const {
        std::vector<double> p = curve_(s);
        for (size_t i = 0; i < p.size(); ++i) p[i] -= base_[i];
        return evaluate_norm(p, norm);
    }

    Curve curve_;
    std::vector<double> base_;
};

inline std::vector<double> evaluate_arc(const PuiseuxArc& arc, double s) {
    std::vector<double> p(arc.dimension());
    for (size_t i = 0; i < arc.dimension(); ++i) {
        double acc = arc.base()[i].to_double();
        for (const auto& t : arc.coords()[i].terms)
            acc += t.coeff.to_double() * std::pow(s, t.exp.to_double());
        p[i] = acc;
    }
    return p;
}

inline ArcSampler sampler_from_arc(const PuiseuxArc& arc) {
    return ArcSampler([arc](double s) { return evaluate_arc(arc, s); },
                      point_to_double(arc.base()));
}

inline ArcSampler sampler_from_leaf(const WeightVector& w, const Leaf& leaf) {
    std::vector<double> seed = point_to_double(leaf.seed);
    std::vector<long long> weights = w.values();
    return ArcSampler(
        [seed, weights](double s) {
            std::vector<double> p(seed.size());
            for (size_t i = 0; i < seed.size(); ++i)
                p[i] = seed[i] * std::pow(s, static_cast<double>(weights[i]));
            return p;
        },
        std::vector<double>(seed.size(), 0.0));
}

// planar curve s -> (s, c * s^lambda); the pair with the axis realizes an
// exact power-law distance profile
inline ArcSampler sampler_power_curve(double coeff, double lambda) {
    return ArcSampler(
        [coeff, lambda](double s) {
            return std::vector<double>{s, coeff * std::pow(s, lambda)};
        },
        {0.0, 0.0});
}

struct SampleGrid {
    double t0 = 1e-2;
    double ratio = 0.5;
    int count = 12;
};

struct DistanceProfile {
    std::vector<std::pair<double, double>> samples;  // (t, d), t strictly decreasing
    double exponent = 0.0;
    double r_squared = 0.0;
    bool ok = false;  // fit quality gate: R^2 >= 0.999
};

constexpr double kFitQualityThreshold = 0.999;

// log-log least squares slope of d against t on a geometric grid; the
// estimate converges to the contact order as t0 -> 0
inline DistanceProfile numerical_contact_order(const ArcSampler& a, const ArcSampler& b,
                                               NormKind norm, const SampleGrid& grid) {
    if (!(grid.t0 > 0) || !(grid.ratio > 0) || !(grid.ratio < 1))
        raise(ErrorKind::Usage, "grid needs t0 > 0 and 0 < ratio < 1");
    if (grid.count < 5) raise(ErrorKind::Usage, "grid needs at least 5 points");

    DistanceProfile profile;
    double t = grid.t0;
    int floored = 0;
    for (int k = 0; k < grid.count; ++k, t *= grid.ratio) {
        std::vector<double> pa = a.at_distance(t, norm);
        std::vector<double> pb = b.at_distance(t, norm);
        for (size_t i = 0; i < pa.size(); ++i) pa[i] -= pb[i];
        double d = evaluate_norm(pa, norm);
        if (!std::isfinite(d) || d == 0.0)
            raise(ErrorKind::DegenerateFit, "zero or non-finite distance sample at t = " +
                                                std::to_string(t));
        if (d < 1e-290) ++floored;
        profile.samples.emplace_back(t, d);
    }
    if (floored == grid.count)
        raise(ErrorKind::DegenerateFit, "all samples below the floating noise floor");

    double sx = 0, sy = 0;
    for (const auto& [tk, dk] : profile.samples) {
        sx += std::log(tk);
        sy += std::log(dk);
    }
    double n = static_cast<double>(profile.samples.size());
    double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [tk, dk] : profile.samples) {
        double dx = std::log(tk) - mx, dy = std::log(dk) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    profile.exponent = sxy / sxx;
    double ss_res = syy - sxy * sxy / sxx;
    profile.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
    profile.ok = profile.r_squared >= kFitQualityThreshold;
    return profile;
}

}  // namespace whgeo
