#pragma once

#include "flagforge/matrix.hpp"
#include "flagforge/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace flagforge {

struct Point {
    RVec coords;

    Point() = default;
    explicit Point(RVec c) : coords(std::move(c)) {}
    Point(std::initializer_list<Rational> c) : coords(c) {}

    std::size_t ambient_dim() const { return coords.size(); }
    bool operator==(const Point&) const = default;
};

// An affine k-flat in Q^d, stored as the canonical RREF basis of its
// homogeneous lift: a point x lies in the flat iff (1, x) lies in the row
// space of `basis`. The RREF form is unique per flat, so equality of flats
// is equality of matrices.
class Flat {
public:
    Flat(int ambient_dim, RMat rref_basis, std::vector<std::size_t> pivots)
        : ambient_dim_(ambient_dim), basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {
        if (basis_.empty())
            throw std::invalid_argument("flat basis must be nonempty");
        if (pivots_.front() != 0)
            throw std::invalid_argument("flat has no affine point (leading coordinate zero)");
    }

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()) - 1; }
    const RMat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // First basis row is (1, x0, ...) because column 0 is its pivot.
    Point anchor() const {
        RVec c(basis_[0].begin() + 1, basis_[0].end());
        return Point(std::move(c));
    }

    // Remaining rows have zero leading coordinate: they span the direction space.
    RMat directions() const {
        RMat dirs;
        for (std::size_t r = 1; r < basis_.size(); ++r)
            dirs.emplace_back(basis_[r].begin() + 1, basis_[r].end());
        return dirs;
    }

    // k+1 affinely independent points spanning the flat.
    std::vector<Point> spanning_points() const {
        std::vector<Point> pts;
        Point a = anchor();
        pts.push_back(a);
        for (RVec& dir : directions()) {
            RVec c = a.coords;
            for (std::size_t j = 0; j < c.size(); ++j)
                c[j] += dir[j];
            pts.push_back(Point(std::move(c)));
        }
        return pts;
    }

    bool operator==(const Flat& o) const {
        return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
    }

    // Deterministic total order (for dedupe and stable output).
    bool operator<(const Flat& o) const {
        if (ambient_dim_ != o.ambient_dim_)
            return ambient_dim_ < o.ambient_dim_;
        if (basis_.size() != o.basis_.size())
            return basis_.size() < o.basis_.size();
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = 0; j < basis_[i].size(); ++j) {
                int c = basis_[i][j].compare(o.basis_[i][j]);
                if (c != 0)
                    return c < 0;
            }
        return false;
    }

private:
    int ambient_dim_;
    RMat basis_;
    std::vector<std::size_t> pivots_;
};

// Canonicalizes an arbitrary spanning set of homogeneous rows into a Flat.
inline Flat flat_from_homogeneous_rows(RMat rows, int ambient_dim) {
    auto pivots = rref_in_place(rows);
    if (rows.empty())
        throw std::invalid_argument("flat from empty row span");
    return Flat(ambient_dim, std::move(rows), std::move(pivots));
}

// Affine hull of a nonempty point set; dim = rank of the centered set.
inline Flat flat_from_points(const std::vector<Point>& points, int ambient_dim) {
    if (points.empty())
        throw std::invalid_argument("flat_from_points: empty point set");
    RMat rows;
    rows.reserve(points.size());
    for (const Point& p : points) {
        if (static_cast<int>(p.coords.size()) != ambient_dim)
            throw std::invalid_argument("flat_from_points: point has wrong ambient dimension");
        RVec r(ambient_dim + 1);
        r[0] = 1;
        for (int j = 0; j < ambient_dim; ++j)
            r[j + 1] = p.coords[j];
        rows.push_back(std::move(r));
    }
    return flat_from_homogeneous_rows(std::move(rows), ambient_dim);
}

inline Flat flat_from_point(const Point& p) {
    return flat_from_points({p}, static_cast<int>(p.coords.size()));
}

// Point anchor + direction rows (need not be independent).
inline Flat flat_from_anchor_and_directions(const Point& anchor, const RMat& dirs) {
    const int d = static_cast<int>(anchor.coords.size());
    RMat rows;
    RVec a(d + 1);
    a[0] = 1;
    for (int j = 0; j < d; ++j)
        a[j + 1] = anchor.coords[j];
    rows.push_back(std::move(a));
    for (const RVec& dir : dirs) {
        RVec r(d + 1);
        r[0] = 0;
        for (int j = 0; j < d; ++j)
            r[j + 1] = dir[j];
        rows.push_back(std::move(r));
    }
    return flat_from_homogeneous_rows(std::move(rows), d);
}

inline void require_same_ambient(const Flat& f, const Flat& g) {
    if (f.ambient_dim() != g.ambient_dim())
        throw std::invalid_argument("flats live in different ambient dimensions");
}

// True iff inner's row space is contained in outer's.
inline bool contains(const Flat& outer, const Flat& inner) {
    require_same_ambient(outer, inner);
    if (inner.dim() > outer.dim())
        return false;
    for (const RVec& row : inner.basis())
        if (!is_zero_vec(reduce_by_rref(row, outer.basis(), outer.pivots())))
            return false;
    return true;
}

inline bool contains_point(const Flat& f, const Point& p) {
    RVec v(f.ambient_dim() + 1);
    v[0] = 1;
    for (int j = 0; j < f.ambient_dim(); ++j)
        v[j + 1] = p.coords[j];
    return is_zero_vec(reduce_by_rref(std::move(v), f.basis(), f.pivots()));
}

// Affine span of the union: the row-space sum of the homogeneous lifts.
inline Flat join(const Flat& f, const Flat& g) {
    require_same_ambient(f, g);
    RMat rows = f.basis();
    rows.insert(rows.end(), g.basis().begin(), g.basis().end());
    return flat_from_homogeneous_rows(std::move(rows), f.ambient_dim());
}

// Intersection, or nullopt when the flats are disjoint. The row-space
// intersection equals the lift of f ∩ g whenever some vector in it has a
// nonzero leading coordinate; otherwise the affine parts miss each other.
inline std::optional<Flat> meet(const Flat& f, const Flat& g) {
    require_same_ambient(f, g);
    RMat w = row_space_intersection(f.basis(), g.basis(), f.ambient_dim() + 1);
    if (w.empty())
        return std::nullopt;
    auto pivots = rref_in_place(w); // already RREF; recompute pivots
    if (pivots.front() != 0)
        return std::nullopt;
    return Flat(f.ambient_dim(), std::move(w), std::move(pivots));
}

} // namespace flagforge
