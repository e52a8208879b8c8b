#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagforge/generic_maps.hpp"
#include "flagforge/verify.hpp"
#include "test_support.hpp"

using namespace flagforge;
using namespace flagforge::testing;

TEST_CASE("sectioning one plane in Q^3 by a generic 2-flat gives a line") {
    Flat plane = plane_eq(1, 2, 3, 4);
    auto result = generic_section({plane}, 2, 17);
    REQUIRE(result.ok);
    REQUIRE(result.images.size() == 1);
    CHECK(result.images[0].dim() == 1);
    CHECK(contains(plane, result.images[0]));
}

TEST_CASE("section preserves a contained pair") {
    Flat plane = plane_eq(1, 0, 0, 0);
    Flat line = span_of({ipoint({0, 0, 0}), ipoint({0, 1, 2})}, 3);
    REQUIRE(contains(plane, line));
    auto result = generic_section({line, plane}, 2, 18);
    REQUIRE(result.ok);
    CHECK(result.images[0].dim() == 0);
    CHECK(result.images[1].dim() == 1);
    CHECK(contains(result.images[1], result.images[0]));
}

TEST_CASE("section of a plane/line instance in Q^4 keeps the incidence count") {
    Rng rng(19);
    LayeredFamily fam = random_small_family(rng, 4, 8, {1, 2});
    std::vector<Flat> all = fam.levels[0].flats;
    all.insert(all.end(), fam.levels[1].flats.begin(), fam.levels[1].flats.end());
    const std::size_t n_low = fam.levels[0].flats.size();
    auto incidences = [&](const std::vector<Flat>& flats) {
        std::size_t count = 0;
        for (std::size_t a = 0; a < n_low; ++a)
            for (std::size_t b = n_low; b < flats.size(); ++b)
                count += contains(flats[b], flats[a]) ? 1 : 0;
        return count;
    };
    std::size_t before = incidences(all);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto result = generic_section(all, 3, seed);
        if (!result.ok)
            continue;
        CHECK(incidences(result.images) == before);
    }
}

TEST_CASE("projection of a point stays a point; containment survives") {
    Flat pt = point_flat({1, 2, 3});
    auto single = generic_projection({pt}, 2, 20);
    REQUIRE(single.ok);
    CHECK(single.images[0].dim() == 0);
    CHECK(single.images[0].ambient_dim() == 2);

    Flat line = span_of({ipoint({1, 2, 3}), ipoint({4, 4, 4})}, 3);
    auto pair = generic_projection({pt, line}, 2, 21);
    REQUIRE(pair.ok);
    CHECK(pair.images[1].dim() == 1);
    CHECK(contains(pair.images[1], pair.images[0]));
}

TEST_CASE("projection preserves incidence counts on random instances") {
    Rng rng(29);
    LayeredFamily fam = random_small_family(rng, 3, 12, {0, 1});
    std::vector<Flat> all = fam.levels[0].flats;
    all.insert(all.end(), fam.levels[1].flats.begin(), fam.levels[1].flats.end());
    const std::size_t n_low = fam.levels[0].flats.size();
    auto incidences = [&](const std::vector<Flat>& flats) {
        std::size_t count = 0;
        for (std::size_t a = 0; a < n_low; ++a)
            for (std::size_t b = n_low; b < flats.size(); ++b)
                count += contains(flats[b], flats[a]) ? 1 : 0;
        return count;
    };
    std::size_t before = incidences(all);
    int succeeded = 0;
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        auto result = generic_projection(all, 2, seed);
        if (!result.ok)
            continue;
        ++succeeded;
        CHECK(incidences(result.images) == before);
        // projections never lose incidences, generic or not
        CHECK(incidences(result.images) >= before);
    }
    CHECK(succeeded >= 8);
}

TEST_CASE("section then projection composition suite") {
    auto r = section_suite(501, 8);
    CHECK(r.failures == 0);
}
