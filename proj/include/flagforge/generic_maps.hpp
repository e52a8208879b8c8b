#pragma once

#include "flagforge/family.hpp"
#include "flagforge/flat.hpp"
#include "flagforge/random.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace flagforge {

// Result of a generic section or projection. `ok` is the genericity flag:
// when false the caller retries with a new seed. Images are reported in
// input order so containment pairs can be compared positionally.
struct GenericMapResult {
    std::vector<Flat> images;
    bool ok = false;
};

namespace detail {

inline bool pairwise_distinct(const std::vector<Flat>& flats) {
    std::vector<const Flat*> sorted;
    sorted.reserve(flats.size());
    for (const Flat& f : flats)
        sorted.push_back(&f);
    std::sort(sorted.begin(), sorted.end(), [](const Flat* a, const Flat* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (*sorted[i - 1] == *sorted[i])
            return false;
    return true;
}

} // namespace detail

// Intersects every flat with one random section_dim-flat pi. For a generic
// draw each flat's dimension drops by exactly the codimension of pi and
// distinct flats stay distinct; containments survive intersection for free.
inline GenericMapResult generic_section(const std::vector<Flat>& flats, int section_dim,
                                        std::uint64_t seed) {
    GenericMapResult result;
    if (flats.empty()) {
        result.ok = true;
        return result;
    }
    Rng rng(seed);
    const int d = flats[0].ambient_dim();
    const int codim = d - section_dim;
    Flat pi = random_flat(rng, d, section_dim);
    for (const Flat& f : flats) {
        auto image = meet(f, pi);
        if (!image || image->dim() != f.dim() - codim)
            return result; // ok = false
        result.images.push_back(std::move(*image));
    }
    result.ok = detail::pairwise_distinct(result.images);
    return result;
}

// Projects every flat onto a random target_dim-flat along a random
// complementary direction space, re-coordinatized so images live in
// Q^target_dim. Affine maps preserve containment; genericity must preserve
// dimensions and distinctness, which is verified.
inline GenericMapResult generic_projection(const std::vector<Flat>& flats, int target_dim,
                                           std::uint64_t seed) {
    GenericMapResult result;
    if (flats.empty()) {
        result.ok = true;
        return result;
    }
    Rng rng(seed);
    const int d = flats[0].ambient_dim();
    if (target_dim >= d)
        throw std::invalid_argument("generic_projection: target_dim must be below ambient_dim");

    // rows 0..t-1 span the target flat, the rest the kill directions
    RMat m(d, RVec(d));
    for (auto& row : m)
        for (auto& x : row)
            x = random_coord(rng);
    RMat mt(d, RVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            mt[i][j] = m[j][i];
    auto inv = inverse_of(mt);
    if (!inv)
        return result; // singular draw: genericity failure
    Point origin = random_point(rng, d);

    auto project_point = [&](const Point& p) {
        RVec diff(d);
        for (int j = 0; j < d; ++j)
            diff[j] = p.coords[j] - origin.coords[j];
        RVec coeffs = mat_vec(*inv, diff);
        return Point(RVec(coeffs.begin(), coeffs.begin() + target_dim));
    };

    for (const Flat& f : flats) {
        std::vector<Point> pts = f.spanning_points();
        for (Point& p : pts)
            p = project_point(p);
        Flat image = flat_from_points(pts, target_dim);
        if (image.dim() != f.dim())
            return result;
        result.images.push_back(std::move(image));
    }
    result.ok = detail::pairwise_distinct(result.images);
    return result;
}

} // namespace flagforge
