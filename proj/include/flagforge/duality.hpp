#pragma once

#include "flagforge/errors.hpp"
#include "flagforge/family.hpp"
#include "flagforge/random.hpp"
#include "flagforge/views3.hpp"

#include <vector>

namespace flagforge {

// Point-plane duality in Q^3: (a,b,c) <-> { z = a x + b y - c }. An
// involution on points and non-vertical planes that reverses containment,
// so flag counts transport across it. Lines map to lines through the duals
// of two of their points.

inline Plane3 dualize_3d(const Point& p) {
    if (p.coords.size() != 3)
        throw std::invalid_argument("dualize_3d: expected a point in Q^3");
    return plane_from_slope_form(p.coords[0], p.coords[1], -p.coords[2]);
}

inline Point dualize_3d(const Plane3& plane) {
    PlaneSlopeForm s = slope_form(plane); // throws VerticalityError if vertical
    return Point{s.u, s.v, -s.w};
}

inline Line3 dualize_3d(const Line3& line) {
    Point p = line.anchor;
    Point q = p;
    for (std::size_t i = 0; i < 3; ++i)
        q.coords[i] += Rational(line.direction[i]);
    Flat dual_p = plane_to_flat(dualize_3d(p));
    Flat dual_q = plane_to_flat(dualize_3d(q));
    auto ell = meet(dual_p, dual_q);
    if (!ell || ell->dim() != 1)
        throw VerticalityError("dualize_3d: line lies in a vertical plane bundle");
    return line_from_flat(*ell);
}

// (P, L, S) -> (S*, L*, P*) as a 3-level family; counts are preserved.
inline LayeredFamily dualize_family_3d(const LayeredFamily& family) {
    if (family.levels.size() != 3 || family.levels[0].dim != 0 || family.levels[1].dim != 1 ||
        family.levels[2].dim != 2)
        throw std::invalid_argument("dualize_family_3d: expected levels of dims (0,1,2) in Q^3");
    LayeredFamily out;
    out.ambient_dim = 3;
    out.levels.resize(3);
    out.levels[0].dim = 0;
    out.levels[1].dim = 1;
    out.levels[2].dim = 2;
    for (const Flat& s : family.levels[2].flats)
        out.levels[0].flats.push_back(flat_from_point(dualize_3d(plane_from_flat(s))));
    for (const Flat& l : family.levels[1].flats)
        out.levels[1].flats.push_back(line_to_flat(dualize_3d(line_from_flat(l))));
    for (const Flat& p : family.levels[0].flats)
        out.levels[2].flats.push_back(plane_to_flat(dualize_3d(p.anchor())));
    out.validate();
    return out;
}

// x -> A x for an invertible rational matrix A, applied to a whole family.
// Incidences are unchanged; used to move vertical objects out of the way
// before dualizing.
inline Flat apply_linear_map(const Flat& f, const RMat& a) {
    std::vector<Point> pts = f.spanning_points();
    for (Point& p : pts)
        p.coords = mat_vec(a, p.coords);
    Flat image = flat_from_points(pts, f.ambient_dim());
    if (image.dim() != f.dim())
        throw GenericityError("apply_linear_map: singular map collapsed a flat");
    return image;
}

inline LayeredFamily apply_linear_map(const LayeredFamily& family, const RMat& a) {
    LayeredFamily out;
    out.ambient_dim = family.ambient_dim;
    for (const Level& lv : family.levels) {
        Level nl;
        nl.dim = lv.dim;
        for (const Flat& f : lv.flats)
            nl.flats.push_back(apply_linear_map(f, a));
        out.levels.push_back(std::move(nl));
    }
    out.validate();
    return out;
}

// Random small-coefficient invertible change of coordinates.
inline RMat random_invertible_map(Rng& rng, int d, std::int64_t range = 9) {
    for (;;) {
        RMat a(d, RVec(d));
        for (auto& row : a)
            for (auto& x : row)
                x = Rational(uniform_int(rng, -range, range));
        if (inverse_of(a))
            return a;
    }
}

// Re-coordinatizes a (P, L, S) family until every plane is non-vertical and
// every line dualizes; gives up after `attempts` tries.
inline LayeredFamily rotate_until_dualizable(const LayeredFamily& family, Rng& rng, int attempts = 64) {
    for (int t = 0; t < attempts; ++t) {
        LayeredFamily cand = t == 0 ? family : apply_linear_map(family, random_invertible_map(rng, 3));
        try {
            dualize_family_3d(cand);
            return cand;
        } catch (const VerticalityError&) {
            continue;
        }
    }
    throw GenericityError("rotate_until_dualizable: no usable rotation found");
}

} // namespace flagforge
