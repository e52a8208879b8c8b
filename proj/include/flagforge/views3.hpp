#pragma once

#include "flagforge/errors.hpp"
#include "flagforge/flat.hpp"
#include "flagforge/rational.hpp"

#include <stdexcept>

namespace flagforge {

// Convenience views of 1- and 2-flats in Q^3. Directions and normals are
// primitive integer vectors with the first nonzero entry positive, so views
// built from canonical flats compare as plain data.

struct Line3 {
    Point anchor;  // from the canonical flat
    ZVec direction; // primitive

    bool operator==(const Line3&) const = default;
};

struct Plane3 {
    ZVec normal;     // primitive
    Rational offset; // plane = { x : normal . x = offset }

    bool operator==(const Plane3&) const = default;

    bool is_vertical() const { return normal[2] == 0; }
};

inline ZVec cross(const ZVec& a, const ZVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline RVec cross(const RVec& a, const RVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Line3 line_from_flat(const Flat& f) {
    if (f.ambient_dim() != 3 || f.dim() != 1)
        throw std::invalid_argument("line_from_flat: expected a 1-flat in Q^3");
    return Line3{f.anchor(), primitive_integer_row(f.directions()[0])};
}

inline Flat line_to_flat(const Line3& line) {
    return flat_from_anchor_and_directions(line.anchor, {to_rational_vec(line.direction)});
}

inline Line3 make_line3(const Point& anchor, const RVec& direction) {
    return line_from_flat(flat_from_anchor_and_directions(anchor, {direction}));
}

// Primitive (normal, offset) pair: scaling that makes the normal primitive
// rescales the offset identically.
inline Plane3 plane_from_normal_offset(const RVec& normal, const Rational& offset) {
    ZVec prim = primitive_integer_row(normal);
    std::size_t i = 0;
    while (i < prim.size() && prim[i] == 0)
        ++i;
    if (i == prim.size())
        throw std::invalid_argument("plane_from_normal_offset: zero normal");
    Rational factor = normal[i] / Rational(prim[i]);
    return Plane3{std::move(prim), offset / factor};
}

inline Plane3 plane_from_flat(const Flat& f) {
    if (f.ambient_dim() != 3 || f.dim() != 2)
        throw std::invalid_argument("plane_from_flat: expected a 2-flat in Q^3");
    RMat dirs = f.directions();
    RVec n = cross(dirs[0], dirs[1]);
    Point a = f.anchor();
    return plane_from_normal_offset(n, dot(n, a.coords));
}

inline Flat plane_to_flat(const Plane3& plane) {
    const ZVec& n = plane.normal;
    // anchor: solve n . x = offset on a coordinate axis
    RVec anchor(3, Rational(0));
    std::size_t i = 0;
    while (n[i] == 0)
        ++i;
    anchor[i] = plane.offset / Rational(n[i]);
    // the three axis-pair candidates span the orthogonal complement of n
    RMat dirs = {
        {Rational(n[1]), Rational(-n[0]), Rational(0)},
        {Rational(n[2]), Rational(0), Rational(-n[0])},
        {Rational(0), Rational(n[2]), Rational(-n[1])},
    };
    Flat f = flat_from_anchor_and_directions(Point(anchor), dirs);
    if (f.dim() != 2)
        throw std::invalid_argument("plane_to_flat: degenerate normal");
    return f;
}

inline bool point_on_plane(const Point& p, const Plane3& plane) {
    Rational acc = 0;
    for (std::size_t i = 0; i < 3; ++i)
        acc += Rational(plane.normal[i]) * p.coords[i];
    return acc == plane.offset;
}

// Non-vertical planes written as z = u x + v y + w.
struct PlaneSlopeForm {
    Rational u, v, w;
};

inline PlaneSlopeForm slope_form(const Plane3& plane) {
    if (plane.is_vertical())
        throw VerticalityError("slope_form: vertical plane");
    Rational nz(plane.normal[2]);
    return PlaneSlopeForm{Rational(-plane.normal[0]) / nz, Rational(-plane.normal[1]) / nz,
                          plane.offset / nz};
}

inline Plane3 plane_from_slope_form(const Rational& u, const Rational& v, const Rational& w) {
    return plane_from_normal_offset({-u, -v, Rational(1)}, w);
}

} // namespace flagforge
