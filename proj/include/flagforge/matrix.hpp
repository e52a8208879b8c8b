#pragma once

#include "flagforge/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace flagforge {

// Exact Gauss-Jordan elimination to reduced row-echelon form: unit pivots,
// zeros above and below each pivot, rows ordered by pivot column, zero rows
// dropped. The result is the unique canonical basis of the row space.
// Returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(RMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        if (m[row][col] != 1) {
            Rational inv = m[row][col];
            for (std::size_t j = col; j < cols; ++j)
                m[row][j] /= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            Rational factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

inline std::size_t rank_of(RMat m) { return rref_in_place(m).size(); }

// Reduces v against an RREF basis: subtracts pivot-column multiples of the
// basis rows. The result is zero iff v lies in the row space.
inline RVec reduce_by_rref(RVec v, const RMat& basis, const std::vector<std::size_t>& pivots) {
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const Rational& c = v[pivots[r]];
        if (c == 0)
            continue;
        Rational factor = c;
        for (std::size_t j = pivots[r]; j < v.size(); ++j)
            v[j] -= factor * basis[r][j];
    }
    return v;
}

inline bool is_zero_vec(const RVec& v) {
    for (const Rational& q : v)
        if (q != 0)
            return false;
    return true;
}

// Basis of the intersection of two row spaces (Zassenhaus): reduce
// [A | A; B | 0]; rows whose left half vanished carry the intersection in
// their right half.
inline RMat row_space_intersection(const RMat& a, const RMat& b, std::size_t cols) {
    RMat work;
    work.reserve(a.size() + b.size());
    for (const RVec& r : a) {
        RVec w(2 * cols);
        for (std::size_t j = 0; j < cols; ++j) {
            w[j] = r[j];
            w[cols + j] = r[j];
        }
        work.push_back(std::move(w));
    }
    for (const RVec& r : b) {
        RVec w(2 * cols);
        for (std::size_t j = 0; j < cols; ++j)
            w[j] = r[j];
        work.push_back(std::move(w));
    }
    rref_in_place(work);
    RMat out;
    for (const RVec& w : work) {
        bool left_zero = true;
        for (std::size_t j = 0; j < cols && left_zero; ++j)
            left_zero = (w[j] == 0);
        if (!left_zero)
            continue;
        RVec right(cols);
        bool nonzero = false;
        for (std::size_t j = 0; j < cols; ++j) {
            right[j] = w[cols + j];
            nonzero = nonzero || right[j] != 0;
        }
        if (nonzero)
            out.push_back(std::move(right));
    }
    rref_in_place(out);
    return out;
}

// Inverse of a square matrix, or nullopt if singular.
inline std::optional<RMat> inverse_of(const RMat& m) {
    const std::size_t n = m.size();
    RMat work(n, RVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            work[i][j] = m[i][j];
        work[i][n + i] = 1;
    }
    auto pivots = rref_in_place(work);
    if (pivots.size() != n || pivots.back() != n - 1)
        return std::nullopt;
    RMat inv(n, RVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = work[i][n + j];
    return inv;
}

inline RVec mat_vec(const RMat& m, const RVec& v) {
    RVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            acc += m[i][j] * v[j];
        out[i] = acc;
    }
    return out;
}

inline Rational dot(const RVec& a, const RVec& b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

} // namespace flagforge
