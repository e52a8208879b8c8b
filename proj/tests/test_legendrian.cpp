#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagforge/legendrian.hpp"
#include "flagforge/verify.hpp"
#include "test_support.hpp"

using namespace flagforge;
using namespace flagforge::testing;

namespace {

Line3 line_of(std::initializer_list<std::int64_t> anchor, std::initializer_list<std::int64_t> dir) {
    RVec d;
    for (auto v : dir)
        d.emplace_back(v);
    return make_line3(ipoint(anchor), d);
}

} // namespace

TEST_CASE("is_legendrian on hand-checked lines") {
    // (1,2,3) + t(2,1,-3): 2*2 - 1*1 - 3 = 0
    CHECK(is_legendrian(line_of({1, 2, 3}, {2, 1, -3})));
    // vertical lines are never Legendrian: the w-term survives
    CHECK(!is_legendrian(line_of({5, -7, 2}, {0, 0, 1})));
    // x-axis through the origin
    CHECK(is_legendrian(line_of({0, 0, 0}, {1, 0, 0})));
}

TEST_CASE("is_legendrian does not depend on the anchor") {
    // representation-level: the same line handed over with different anchors
    Line3 l1{ipoint({1, 2, 3}), ZVec{BigInt(2), BigInt(1), BigInt(-3)}};
    Line3 l2{ipoint({3, 3, 0}), ZVec{BigInt(2), BigInt(1), BigInt(-3)}};      // anchor + direction
    Line3 l3{ipoint({-1, 1, 6}), ZVec{BigInt(-2), BigInt(-1), BigInt(3)}};    // anchor - direction, flipped
    CHECK(is_legendrian(l1));
    CHECK(is_legendrian(l2));
    CHECK(is_legendrian(l3));
}

TEST_CASE("legendrian_plane") {
    CHECK(legendrian_plane(ipoint({0, 0, 0})) ==
          plane_from_normal_offset({Rational(0), Rational(0), Rational(1)}, Rational(0)));
    // p = (1,0,0): normal (0,-1,1) through p, i.e. z = y
    Plane3 pi = legendrian_plane(ipoint({1, 0, 0}));
    CHECK(pi == plane_from_normal_offset({Rational(0), Rational(-1), Rational(1)}, Rational(0)));

    // twenty directions inside pi(1,2,3): all Legendrian
    Point p = ipoint({1, 2, 3});
    Plane3 plane = legendrian_plane(p);
    CHECK(point_on_plane(p, plane));
    Rng rng(15);
    int made = 0;
    while (made < 20) {
        RVec v = {Rational(uniform_int(rng, -6, 6)), Rational(uniform_int(rng, -6, 6)), Rational(0)};
        if (is_zero_vec(v))
            continue;
        // project v into the plane's direction space: subtract the normal component
        RVec n = to_rational_vec(plane.normal);
        Rational lambda = dot(v, n) / dot(n, n);
        for (int j = 0; j < 3; ++j)
            v[j] -= lambda * n[j];
        if (is_zero_vec(v))
            continue;
        CHECK(is_legendrian(make_line3(p, v)));
        ++made;
    }
}

TEST_CASE("legendrian_point") {
    CHECK(legendrian_point(plane_from_slope_form(Rational(0), Rational(0), Rational(0))) ==
          ipoint({0, 0, 0}));
    // z = 2x - y + 5 -> (-1, -2, 5)
    CHECK(legendrian_point(plane_from_slope_form(Rational(2), Rational(-1), Rational(5))) ==
          ipoint({-1, -2, 5}));

    // z = x + y: point (1,-1,0); sampled lines through it in the plane are Legendrian
    Plane3 plane = plane_from_slope_form(Rational(1), Rational(1), Rational(0));
    Point p = legendrian_point(plane);
    CHECK(p == ipoint({1, -1, 0}));
    Rng rng(16);
    for (int rep = 0; rep < 50; ++rep) {
        Rational alpha(uniform_int(rng, -8, 8)), beta(uniform_int(rng, -8, 8));
        if (alpha == 0 && beta == 0)
            continue;
        RVec dir = {alpha, beta, alpha + beta}; // in-plane: dz = dx + dy
        CHECK(is_legendrian(make_line3(p, dir)));
    }
}

TEST_CASE("legendrian_line_at") {
    Plane3 z0 = plane_from_slope_form(Rational(0), Rational(0), Rational(0));
    auto at_special = legendrian_line_at(ipoint({0, 0, 0}), z0);
    CHECK(!at_special.has_value());

    auto line = legendrian_line_at(ipoint({1, 0, 0}), z0);
    REQUIRE(line.has_value());
    CHECK(line->direction == ZVec{BigInt(1), BigInt(0), BigInt(0)});
    CHECK(contains_point(line_to_flat(*line), ipoint({1, 0, 0})));

    CHECK_THROWS_AS(legendrian_line_at(ipoint({0, 0, 5}), z0), std::invalid_argument);
}

TEST_CASE("legendrian suite passes") {
    auto r = legendrian_suite(99, 100, 25);
    CHECK(r.failures == 0);
}
