#pragma once

#include "flagforge/flat.hpp"
#include "flagforge/rational.hpp"

#include <cstdint>
#include <random>

namespace flagforge {

using Rng = std::mt19937_64;

// Generic flats are realized as integer coordinates sampled from this range,
// followed by explicit verification of the property the caller needs.
inline constexpr std::int64_t kGenericCoordRange = 1'000'000;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_coord(Rng& rng, std::int64_t range = kGenericCoordRange) {
    return Rational(uniform_int(rng, -range, range));
}

inline Point random_point(Rng& rng, int ambient_dim, std::int64_t range = kGenericCoordRange) {
    RVec c(ambient_dim);
    for (auto& x : c)
        x = random_coord(rng, range);
    return Point(std::move(c));
}

// Random flat of the requested dimension (retries until the sampled points
// are affinely independent, which at this coordinate range is immediate).
inline Flat random_flat(Rng& rng, int ambient_dim, int dim, std::int64_t range = kGenericCoordRange) {
    for (;;) {
        std::vector<Point> pts;
        pts.reserve(dim + 1);
        for (int i = 0; i <= dim; ++i)
            pts.push_back(random_point(rng, ambient_dim, range));
        Flat f = flat_from_points(pts, ambient_dim);
        if (f.dim() == dim)
            return f;
    }
}

} // namespace flagforge
