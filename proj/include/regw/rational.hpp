#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "regw/errors.hpp"

namespace regw {

// Exact arbitrary-precision fraction.  Always reduced, denominator > 0,
// comparison and equality are exact.  Every weight and weighted degree in
// this library is a Rational; properness is an exact-equality predicate,
// so floating point is never used.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "3", "-1", "1/2", "-7/3", "0.25", "-1.5".  Decimal forms are
// converted exactly (0.25 -> 1/4).
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad rational '" + std::string(text) + "': " + why, pos);
    };
    if (text.empty()) throw fail("empty");

    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&]() -> BigInt {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') throw fail("digit expected");
        BigInt value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return value;
    };

    BigInt whole = digits();
    BigInt num = whole, den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits();
        if (den == 0) throw fail("zero denominator");
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        BigInt frac = digits();
        for (std::size_t i = start; i < pos; ++i) den *= 10;
        num = whole * den + frac;
    }
    if (pos != text.size()) throw fail("trailing characters");

    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

// Canonical "num/den" form, e.g. "-1/1", "2/1", "1/2".
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Three strictly increasing weights a < b < c.  The equal-gap flag
// (b-a == c-b) selects the non-constructive fallback in the dispatcher.
struct WeightSet {
    std::array<Rational, 3> values;  // ascending

    static WeightSet of(Rational a, Rational b, Rational c) {
        if (!(a < b && b < c))
            throw InputError("weight set must be three strictly increasing values, got {" +
                             to_fraction_string(a) + ", " + to_fraction_string(b) + ", " +
                             to_fraction_string(c) + "}");
        return WeightSet{{std::move(a), std::move(b), std::move(c)}};
    }

    // Parses "a,b,c"; values may arrive in any order but must be distinct.
    static WeightSet parse(std::string_view text) {
        std::vector<Rational> vals;
        std::size_t begin = 0;
        while (begin <= text.size()) {
            std::size_t end = text.find(',', begin);
            if (end == std::string_view::npos) end = text.size();
            vals.push_back(parse_rational(text.substr(begin, end - begin)));
            begin = end + 1;
            if (end == text.size()) break;
        }
        if (vals.size() != 3) throw InputError("weight set needs exactly 3 values");
        std::sort(vals.begin(), vals.end());
        return of(vals[0], vals[1], vals[2]);
    }

    const Rational& a() const { return values[0]; }
    const Rational& b() const { return values[1]; }
    const Rational& c() const { return values[2]; }

    bool equal_gaps() const { return b() - a() == c() - b(); }

    bool contains(const Rational& r) const {
        return r == values[0] || r == values[1] || r == values[2];
    }

    std::string str() const {
        return "{" + to_fraction_string(a()) + ", " + to_fraction_string(b()) + ", " +
               to_fraction_string(c()) + "}";
    }
};

}  // namespace regw
