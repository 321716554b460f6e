// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "whgeo/errors.hpp"
#include "whgeo/rational.hpp"

namespace whgeo {

// Nonincreasing positive integer weights (a_1 >= a_2 >= ... >= a_n >= 1).
class WeightVector {
public:
    static WeightVector validate(const std::vector<long long>& raw) {
        if (raw.empty()) raise(ErrorKind::NotPositive, "empty weight sequence");
        for (size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] <= 0)
                raise(ErrorKind::NotPositive,
                      "weight a_" + std::to_string(i + 1) + " = " + std::to_string(raw[i]));
        }
        for (size_t i = 1; i < raw.size(); ++i) {
            if (raw[i] > raw[i - 1])
                raise(ErrorKind::NotSorted, "weights increase at position " + std::to_string(i + 1) +
                                                " (" + std::to_string(raw[i - 1]) + " < " +
                                                std::to_string(raw[i]) + ")");
        }
        return WeightVector(raw);
    }

    size_t size() const { return weights_.size(); }
    long long operator[](size_t i) const { return weights_[i]; }
    const std::vector<long long>& values() const { return weights_; }

    // keeps the first m weights (still nonincreasing by construction)
    WeightVector prefix(size_t m) const {
        return WeightVector(std::vector<long long>(weights_.begin(), weights_.begin() + m));
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.weights_ == b.weights_;
    }
    friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }

private:
    explicit WeightVector(std::vector<long long> w) : weights_(std::move(w)) {}
    std::vector<long long> weights_;
};

inline WeightVector validate_weights(const std::vector<long long>& raw) {
    return WeightVector::validate(raw);
}

// { a_i / a_j : i < j }, reduced, ascending, deduplicated. Empty for n = 1.
inline std::vector<Rational> simplex_directions(const WeightVector& w) {
    std::vector<Rational> dirs;
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = i + 1; j < w.size(); ++j) {
            dirs.emplace_back(w[i], w[j]);
        }
    }
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    return dirs;
}

// The Standard Newton Simplex of a weight vector, represented through the
// direction set of its 1-dimensional faces.
struct NewtonSimplex {
    explicit NewtonSimplex(WeightVector w)
        : weights(std::move(w)), directions(simplex_directions(weights)) {}

    WeightVector weights;
    std::vector<Rational> directions;

    bool contains_direction(const Rational& d) const {
        return std::binary_search(directions.begin(), directions.end(), d);
    }
};

}  // namespace whgeo
