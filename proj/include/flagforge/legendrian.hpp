#pragma once

#include "flagforge/views3.hpp"

#include <optional>
#include <stdexcept>

namespace flagforge {

// A line is Legendrian when it is orthogonal to the field (y, -x, 1) at each
// of its points. For anchor (a,b,c) and direction (u,v,w) the product
// b u - a v + w does not depend on the point chosen along the line, so one
// evaluation decides.
inline bool is_legendrian(const Line3& line) {
    const Rational& a = line.anchor.coords[0];
    const Rational& b = line.anchor.coords[1];
    return b * Rational(line.direction[0]) - a * Rational(line.direction[1]) +
               Rational(line.direction[2]) ==
           0;
}

// The plane through p = (a,b,c) with normal (b,-a,1): every line through p
// inside it is Legendrian.
inline Plane3 legendrian_plane(const Point& p) {
    const Rational& a = p.coords[0];
    const Rational& b = p.coords[1];
    RVec n = {b, -a, Rational(1)};
    return plane_from_normal_offset(n, dot(n, p.coords));
}

// The unique point of a non-vertical plane z = u x + v y + w whose associated
// normal is parallel to the plane's normal: (v, -u, w).
inline Point legendrian_point(const Plane3& plane) {
    PlaneSlopeForm s = slope_form(plane);
    return Point{s.v, -s.u, s.w};
}

// The single Legendrian line inside `plane` through an on-plane point q, or
// nullopt at the Legendrian point (where every in-plane line qualifies).
inline std::optional<Line3> legendrian_line_at(const Point& q, const Plane3& plane) {
    if (!point_on_plane(q, plane))
        throw std::invalid_argument("legendrian_line_at: point not on plane");
    if (q == legendrian_point(plane))
        return std::nullopt;
    RVec field = {q.coords[1], -q.coords[0], Rational(1)};
    RVec dir = cross(to_rational_vec(plane.normal), field);
    return make_line3(q, dir);
}

} // namespace flagforge
