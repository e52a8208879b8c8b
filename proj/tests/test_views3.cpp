#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagforge/views3.hpp"
#include "test_support.hpp"

using namespace flagforge;
using namespace flagforge::testing;

TEST_CASE("line view round-trips through the canonical flat") {
    Rng rng(3);
    for (int rep = 0; rep < 30; ++rep) {
        Flat f = random_flat(rng, 3, 1, 40);
        Line3 view = line_from_flat(f);
        CHECK(line_to_flat(view) == f);
        // primitive direction, first nonzero entry positive
        BigInt g = 0;
        for (const BigInt& c : view.direction)
            g = boost::multiprecision::gcd(g, c);
        CHECK(g == 1);
        std::size_t lead = 0;
        while (view.direction[lead] == 0)
            ++lead;
        CHECK(view.direction[lead] > 0);
    }
}

TEST_CASE("plane view round-trips through the canonical flat") {
    Rng rng(4);
    for (int rep = 0; rep < 30; ++rep) {
        Flat f = random_flat(rng, 3, 2, 40);
        Plane3 view = plane_from_flat(f);
        CHECK(plane_to_flat(view) == f);
        for (const Point& p : f.spanning_points())
            CHECK(point_on_plane(p, view));
    }
}

TEST_CASE("slope form of a non-vertical plane") {
    // z = 2x - y + 5  <->  normal (-2, 1, 1), offset 5
    Plane3 plane = plane_from_slope_form(Rational(2), Rational(-1), Rational(5));
    PlaneSlopeForm s = slope_form(plane);
    CHECK(s.u == 2);
    CHECK(s.v == -1);
    CHECK(s.w == 5);
    CHECK(!plane.is_vertical());

    Plane3 vertical = plane_from_normal_offset({Rational(1), Rational(2), Rational(0)}, Rational(3));
    CHECK(vertical.is_vertical());
    CHECK_THROWS_AS(slope_form(vertical), VerticalityError);
}

TEST_CASE("line and plane views are canonical data") {
    Flat a = span_of({ipoint({0, 0, 0}), ipoint({2, 4, 6})}, 3);
    Flat b = span_of({ipoint({1, 2, 3}), ipoint({-1, -2, -3})}, 3);
    CHECK(line_from_flat(a) == line_from_flat(b));

    Flat p = plane_eq(2, -4, 6, 8);
    Flat q = plane_eq(-1, 2, -3, -4);
    CHECK(plane_from_flat(p) == plane_from_flat(q));
    CHECK(plane_from_flat(p).normal == ZVec{BigInt(1), BigInt(-2), BigInt(3)});
    CHECK(plane_from_flat(p).offset == 4);
}
