// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "whgeo/arc.hpp"
#include "whgeo/errors.hpp"
#include "whgeo/rational.hpp"
#include "whgeo/surface.hpp"
#include "whgeo/weights.hpp"

namespace whgeo {
namespace parse_detail {

// shared scanning helpers; error offsets are 1-based byte positions
struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        raise(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos + 1));
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoll(text.substr(start, pos - start));
    }
    // integer or fraction a/b (no parentheses, binds tight)
    Rational fraction() {
        long long num = integer();
        if (accept('/')) {
            long long den = integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }
};

}  // namespace parse_detail

// Polynomial grammar: variables x1,x2,x3 (aliases x,y,z), integer or
// fraction coefficients, operators + - * ^, implicit multiplication
// forbidden, exponents nonnegative integers. e.g. "x1^2 + x2^2 - x3^4".
inline WeightedPolynomial parse_polynomial(const std::string& text) {
    parse_detail::Cursor cur{text};
    if (cur.eof()) raise(ErrorKind::SyntaxError, "empty polynomial at offset 1");

    std::vector<WeightedPolynomial::Monomial> monomials;
    auto variable_index = [&](const std::string& name) -> size_t {
        if (name == "x1" || name == "x") return 0;
        if (name == "x2" || name == "y") return 1;
        if (name == "x3" || name == "z") return 2;
        raise(ErrorKind::UnknownVariable, "unknown variable '" + name + "'");
    };

    bool first = true;
    while (!cur.eof()) {
        int sign = 1;
        if (cur.accept('-'))
            sign = -1;
        else if (cur.accept('+')) {
            if (first) cur.fail("unexpected '+'");
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;

        // term := factor ('*' factor)*
        WeightedPolynomial::Monomial mono{Rational(sign), {0, 0, 0}};
        bool more = true;
        while (more) {
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                mono.coeff = mono.coeff * cur.fraction();
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                size_t start = cur.pos;
                while (cur.pos < text.size() &&
                       std::isalnum(static_cast<unsigned char>(text[cur.pos])))
                    ++cur.pos;
                size_t vi = variable_index(text.substr(start, cur.pos - start));
                long long e = 1;
                if (cur.accept('^')) e = cur.integer();
                if (e < 0) cur.fail("negative exponent");
                mono.exps[vi] += e;
            } else {
                cur.fail("expected a coefficient or variable");
            }
            more = cur.accept('*');
        }
        monomials.push_back(std::move(mono));
    }
    return WeightedPolynomial(3, std::move(monomials));
}

// Arc grammar: coordinates separated by ';', each a sum of terms c*t^p with
// integer or fraction c and p; "t^3/2" binds the fraction to the exponent.
// A coordinate written "0" is identically zero.
inline PuiseuxArc parse_arc(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    std::vector<Series<Rational>> coords;
    for (const auto& part : parts) {
        parse_detail::Cursor cur{part};
        std::vector<Series<Rational>::Term> terms;
        if (cur.eof()) cur.fail("empty coordinate");
        bool first = true;
        while (!cur.eof()) {
            int sign = 1;
            if (cur.accept('-'))
                sign = -1;
            else if (cur.accept('+')) {
                if (first) cur.fail("unexpected '+'");
            } else if (!first) {
                cur.fail("expected '+' or '-'");
            }
            first = false;

            char c = cur.peek();
            Rational coeff(sign);
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Rational value = cur.fraction();
                if (value.is_zero()) continue;  // literal 0 coordinate (or 0 term)
                coeff = coeff * value;
                if (!cur.accept('*')) cur.fail("expected '*' before t");
            }
            if (cur.peek() != 't') cur.fail("expected 't'");
            ++cur.pos;
            Rational exp(1);
            if (cur.accept('^')) exp = cur.fraction();
            if (exp.sign() <= 0)
                raise(ErrorKind::NonPositiveExponent,
                      "arc exponent must be positive, got " + exp.to_string());
            terms.push_back({exp, coeff});
        }
        coords.push_back(series::normalized<Rational>(std::move(terms), std::nullopt));
    }
    return PuiseuxArc(Point(coords.size(), Rational(0)), std::move(coords));
}

// "3,2,1" -> {3,2,1}
inline std::vector<long long> parse_integer_list(const std::string& text) {
    std::vector<long long> out;
    parse_detail::Cursor cur{text};
    if (cur.eof()) raise(ErrorKind::SyntaxError, "empty list at offset 1");
    while (true) {
        int sign = cur.accept('-') ? -1 : 1;
        out.push_back(sign * cur.integer());
        if (cur.eof()) break;
        if (!cur.accept(',')) cur.fail("expected ','");
    }
    return out;
}

// "1,1/2,-3" -> rational point
inline Point parse_point(const std::string& text) {
    Point out;
    parse_detail::Cursor cur{text};
    if (cur.eof()) raise(ErrorKind::SyntaxError, "empty point at offset 1");
    while (true) {
        int sign = cur.accept('-') ? -1 : 1;
        out.push_back(Rational(sign) * cur.fraction());
        if (cur.eof()) break;
        if (!cur.accept(',')) cur.fail("expected ','");
    }
    return out;
}

}  // namespace whgeo
