#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagforge {

// Exact arbitrary-precision rational scalar. GMP keeps values canonical:
// lowest terms, positive denominator. All geometry in this library is exact.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;
using ZVec = std::vector<BigInt>;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Serialized form: "p" for integers, "p/q" otherwise (exact decimal strings).
inline std::string rational_to_string(const Rational& q) { return q.str(); }

inline Rational rational_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rational q(s);
    return q;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Least common multiple of the denominators of a row, always >= 1.
inline BigInt denominator_lcm(const RVec& row) {
    BigInt l = 1;
    for (const Rational& q : row)
        l = boost::multiprecision::lcm(l, denominator(q));
    return l;
}

// Scales a rational row to a primitive integer vector (content 1) whose first
// nonzero entry is positive. Zero rows map to zero vectors.
inline ZVec primitive_integer_row(const RVec& row) {
    BigInt scale = denominator_lcm(row);
    ZVec out(row.size());
    BigInt content = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        Rational scaled = row[i] * scale;
        out[i] = numerator(scaled);
        content = boost::multiprecision::gcd(content, out[i]);
    }
    if (content == 0)
        return out;
    int sign = 0;
    for (auto& v : out) {
        v /= content;
        if (sign == 0 && v != 0)
            sign = v > 0 ? 1 : -1;
    }
    if (sign < 0)
        for (auto& v : out)
            v = -v;
    return out;
}

inline RVec to_rational_vec(const ZVec& v) {
    RVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(v[i]);
    return out;
}

} // namespace flagforge
