#pragma once

#include "flagforge/tuples.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagforge {

// Evaluated bound: the sum of its terms in double precision, plus the term
// that contributed the most (the active regime) and that term's value.
struct BoundValue {
    double value = 0.0;
    std::string dominant_term;
    double dominant_value = 0.0;
};

namespace detail {

struct TermAccumulator {
    double total = 0.0;
    double best = -1.0;
    std::string best_label;

    // near-ties keep the earlier term, so the label is stable under the
    // rounding of fractional powers
    void add(double v, const std::string& label) {
        total += v;
        if (v > best * (1.0 + 1e-12) + 1e-300) {
            best = v;
            best_label = label;
        }
    }

    BoundValue finish() const { return BoundValue{total, best_label, best}; }
};

} // namespace detail

// Sum over the valid exponent tuples of prod sizes_i^{a_i}. Counts are exact
// integers; bounds are asymptotic, so double precision is all they warrant.
inline BoundValue flags_bound(const std::vector<double>& sizes) {
    for (double s : sizes)
        if (s < 1)
            throw std::invalid_argument("flags_bound: sizes must be >= 1");
    const int d = static_cast<int>(sizes.size());
    detail::TermAccumulator acc;
    for (const ExponentTuple& t : valid_exponent_tuples(d)) {
        double term = 1.0;
        for (int i = 0; i < d; ++i)
            term *= std::pow(sizes[i], exponent_value(t[i]));
        acc.add(term, tuple_label(t));
    }
    return acc.finish();
}

// Szemeredi-Trotter: m^{2/3} n^{2/3} + m + n.
inline BoundValue st_bound(double m, double n) {
    detail::TermAccumulator acc;
    acc.add(std::pow(m, 2.0 / 3.0) * std::pow(n, 2.0 / 3.0), "m^{2/3}n^{2/3}");
    acc.add(m, "m");
    acc.add(n, "n");
    return acc.finish();
}

// Guth-Katz, no plane holding more than B lines:
// m^{1/2} n^{3/4} + m^{2/3} n^{1/3} B^{1/3} + m + n.
inline BoundValue gk_bound(double m, double n, double B) {
    detail::TermAccumulator acc;
    acc.add(std::sqrt(m) * std::pow(n, 0.75), "m^{1/2}n^{3/4}");
    acc.add(std::pow(m, 2.0 / 3.0) * std::cbrt(n) * std::cbrt(B), "m^{2/3}n^{1/3}B^{1/3}");
    acc.add(m, "m");
    acc.add(n, "n");
    return acc.finish();
}

// Shared form of the light-like and Legendrian bounds: m^{1/2} n^{3/4} + m + n.
inline BoundValue pl34_bound(double m, double n) {
    detail::TermAccumulator acc;
    acc.add(std::sqrt(m) * std::pow(n, 0.75), "m^{1/2}n^{3/4}");
    acc.add(m, "m");
    acc.add(n, "n");
    return acc.finish();
}

// log b enters an asymptotic bound; evaluate as ln(max(b,2)) so b=1 does not
// annihilate the term.
inline double bounded_log(double b) { return std::log(std::max(b, 2.0)); }

// Flags in 3-space when every line holds at most b points and lies on at
// most b planes: min of the two branches of the bound.
inline BoundValue flags3d_restricted_bound(double p, double l, double s, double b) {
    if (b < 1)
        throw std::invalid_argument("flags3d_restricted_bound: b must be >= 1");
    const double branch_a = b * b * l;
    detail::TermAccumulator acc;
    acc.add((p + s) * std::sqrt(l), "(p+s)l^{1/2}");
    acc.add((p * std::sqrt(s) + s * std::sqrt(p)) * bounded_log(b), "(p s^{1/2}+s p^{1/2})log b");
    acc.add((p + s) * b, "(p+s)b");
    BoundValue branch_b = acc.finish();
    if (branch_a <= branch_b.value)
        return BoundValue{branch_a, "b^2 l", branch_a};
    return branch_b;
}

// Maximal runs of consecutive dimensions in a strictly increasing
// subsequence; runs are separated by gaps of at least 2.
inline std::vector<std::pair<std::size_t, std::size_t>> consecutive_runs(const std::vector<int>& dims) {
    if (dims.empty())
        throw std::invalid_argument("consecutive_runs: empty subsequence");
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= dims.size(); ++i) {
        if (i == dims.size() || dims[i] != dims[i - 1] + 1) {
            if (i < dims.size() && dims[i] <= dims[i - 1])
                throw std::invalid_argument("consecutive_runs: dims must strictly increase");
            runs.emplace_back(start, i);
            start = i;
        }
    }
    return runs;
}

// Partial-flag bound: product of the complete-flag bound over maximal runs.
inline BoundValue partial_flags_bound(const std::vector<int>& dims, const std::vector<double>& sizes) {
    if (dims.size() != sizes.size())
        throw std::invalid_argument("partial_flags_bound: dims/sizes length mismatch");
    double value = 1.0;
    double dominant = 1.0;
    std::string label;
    for (auto [lo, hi] : consecutive_runs(dims)) {
        std::vector<double> run_sizes(sizes.begin() + lo, sizes.begin() + hi);
        BoundValue run = flags_bound(run_sizes);
        value *= run.value;
        dominant *= run.dominant_value;
        if (!label.empty())
            label += " * ";
        label += run.dominant_term;
    }
    return BoundValue{value, label, dominant};
}

} // namespace flagforge
