#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagforge {

// One exponent symbol of a bound term: 0, 2/3, or 1.
enum class Exponent : std::uint8_t { Zero = 0, TwoThirds = 1, One = 2 };

inline double exponent_value(Exponent e) {
    switch (e) {
    case Exponent::Zero: return 0.0;
    case Exponent::TwoThirds: return 2.0 / 3.0;
    case Exponent::One: return 1.0;
    }
    return 0.0;
}

inline std::string exponent_label(Exponent e) {
    switch (e) {
    case Exponent::Zero: return "0";
    case Exponent::TwoThirds: return "2/3";
    case Exponent::One: return "1";
    }
    return "?";
}

// A length-d vector over {0, 2/3, 1}: pairs of consecutive 2/3's or solitary
// 1's separated by one or two 0's, with at most a single 0 hanging off each
// end.
using ExponentTuple = std::vector<Exponent>;

inline std::string tuple_label(const ExponentTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ",";
        s += exponent_label(t[i]);
    }
    s += ")";
    return s;
}

// The four side conditions, each checked independently.
inline bool no_three_consecutive_nonzero(const ExponentTuple& t) {
    for (std::size_t i = 0; i + 2 < t.size(); ++i)
        if (t[i] != Exponent::Zero && t[i + 1] != Exponent::Zero && t[i + 2] != Exponent::Zero)
            return false;
    return true;
}

inline bool ones_flanked_by_zeros(const ExponentTuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] != Exponent::One)
            continue;
        if (i > 0 && t[i - 1] != Exponent::Zero)
            return false;
        if (i + 1 < t.size() && t[i + 1] != Exponent::Zero)
            return false;
    }
    return true;
}

inline bool two_thirds_paired(const ExponentTuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] != Exponent::TwoThirds)
            continue;
        bool prev = i > 0 && t[i - 1] == Exponent::TwoThirds;
        bool next = i + 1 < t.size() && t[i + 1] == Exponent::TwoThirds;
        if (!prev && !next)
            return false;
    }
    return true;
}

inline bool zeros_touch_nonzero(const ExponentTuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] != Exponent::Zero)
            continue;
        bool prev = i > 0 && t[i - 1] != Exponent::Zero;
        bool next = i + 1 < t.size() && t[i + 1] != Exponent::Zero;
        if (!prev && !next)
            return false;
    }
    return true;
}

inline bool is_valid_exponent_tuple(const ExponentTuple& t) {
    return no_three_consecutive_nonzero(t) && ones_flanked_by_zeros(t) && two_thirds_paired(t) &&
           zeros_touch_nonzero(t);
}

// Brute-force route: filter all 3^d vectors by the four conditions.
inline std::vector<ExponentTuple> exponent_tuples_bruteforce(int d) {
    if (d < 1)
        throw std::invalid_argument("tuple length must be >= 1");
    std::vector<ExponentTuple> out;
    ExponentTuple t(d, Exponent::Zero);
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < d; ++i) {
            t[i] = static_cast<Exponent>(c % 3);
            c /= 3;
        }
        if (is_valid_exponent_tuple(t))
            out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Constructive grammar: [0]? block ([0] | [0,0]) block ... [0]?  with
// blocks [1] and [2/3,2/3].
inline void extend_tuple(ExponentTuple& t, int d, std::vector<ExponentTuple>& out) {
    const int n = static_cast<int>(t.size());
    if (n == d) {
        out.push_back(t);
        return;
    }
    auto push_block = [&](std::initializer_list<Exponent> block) {
        if (n + static_cast<int>(block.size()) > d)
            return;
        for (Exponent e : block)
            t.push_back(e);
        extend_tuple(t, d, out);
        t.resize(n);
    };
    // after a block: either end with one trailing zero, or separate and recurse
    push_block({Exponent::Zero, Exponent::One});
    push_block({Exponent::Zero, Exponent::TwoThirds, Exponent::TwoThirds});
    push_block({Exponent::Zero, Exponent::Zero, Exponent::One});
    push_block({Exponent::Zero, Exponent::Zero, Exponent::TwoThirds, Exponent::TwoThirds});
    if (n + 1 == d)
        push_block({Exponent::Zero});
}

} // namespace detail

// Exactly the tuples satisfying the four conditions, built constructively.
inline std::vector<ExponentTuple> valid_exponent_tuples(int d) {
    if (d < 1)
        throw std::invalid_argument("tuple length must be >= 1");
    std::vector<ExponentTuple> out;
    ExponentTuple t;
    auto seed_block = [&](std::initializer_list<Exponent> block) {
        if (static_cast<int>(block.size()) > d)
            return;
        t.assign(block.begin(), block.end());
        detail::extend_tuple(t, d, out);
    };
    seed_block({Exponent::One});
    seed_block({Exponent::TwoThirds, Exponent::TwoThirds});
    seed_block({Exponent::Zero, Exponent::One});
    seed_block({Exponent::Zero, Exponent::TwoThirds, Exponent::TwoThirds});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace flagforge
