#pragma once

#include "flagforge/constructions.hpp"
#include "flagforge/counting.hpp"
#include "flagforge/duality.hpp"
#include "flagforge/generic_maps.hpp"
#include "flagforge/instances.hpp"
#include "flagforge/legendrian.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace flagforge {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> notes;

    bool passed() const { return failures == 0 && checks > 0; }

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
};

using CountFn = std::function<BigInt(const LayeredFamily&)>;

inline BigInt default_counter(const LayeredFamily& family) { return count_flags_dp(family); }

// DP against the exhaustive oracle on random nested-join families. The
// counter is injectable so a deliberately broken one can be shown to fail.
inline SuiteResult oracle_suite(std::uint64_t seed, int instances, const CountFn& counter = default_counter) {
    SuiteResult r{"oracle-equivalence"};
    Rng rng(seed);
    for (int i = 0; i < instances; ++i) {
        int d = 2 + static_cast<int>(uniform_int(rng, 0, 2));
        LayeredFamily fam = random_layered_family(rng, d, 12);
        r.expect(counter(fam) == count_flags_bruteforce(fam),
                 "dp/bruteforce mismatch at instance " + std::to_string(i));
    }
    return r;
}

// Degree-split decomposition: the three restricted counts add back up.
inline SuiteResult eqsum_suite(std::uint64_t seed, int instances) {
    SuiteResult r{"eqsum-decomposition"};
    Rng rng(seed);
    for (int i = 0; i < instances; ++i) {
        int d = 3 + static_cast<int>(uniform_int(rng, 0, 1));
        LayeredFamily fam = random_layered_family(rng, d, 8);
        ContainmentGraph graph = containment_graph(fam);
        BigInt total = count_flags_dp(fam, graph);
        for (std::size_t lvl = 1; lvl + 1 < fam.levels.size(); ++lvl) {
            auto split = degree_split(fam, lvl, graph);
            BigInt sum = count_flags_dp(replace_level(fam, lvl, split.s0)) +
                         count_flags_dp(replace_level(fam, lvl, split.s1)) +
                         count_flags_dp(replace_level(fam, lvl, split.s2));
            r.expect(sum == total, "eq:sum violated at instance " + std::to_string(i) + ", level " +
                                       std::to_string(lvl));
        }
    }
    return r;
}

// Flag counts are invariant under point-plane duality.
inline SuiteResult duality_suite(std::uint64_t seed, int instances) {
    SuiteResult r{"duality-transport"};
    Rng rng(seed);
    for (int i = 0; i < instances; ++i) {
        LayeredFamily fam = random_layered_family(rng, 3, 8);
        LayeredFamily rotated = rotate_until_dualizable(fam, rng);
        r.expect(count_flags_dp(rotated) == count_flags_dp(dualize_family_3d(rotated)),
                 "count changed under duality at instance " + std::to_string(i));
    }
    return r;
}

// Legendrian laws: anchor independence, the Legendrian point, uniqueness of
// the in-plane Legendrian line elsewhere.
inline SuiteResult legendrian_suite(std::uint64_t seed, int lines, int planes) {
    SuiteResult r{"legendrian-laws"};
    Rng rng(seed);
    for (int i = 0; i < lines; ++i) {
        Point a = random_point(rng, 3, 50);
        RVec dir(3);
        do {
            for (auto& c : dir)
                c = Rational(uniform_int(rng, -9, 9));
        } while (is_zero_vec(dir));
        Line3 from_a = make_line3(a, dir);
        Point b = a;
        Rational t(uniform_int(rng, 1, 7));
        for (int j = 0; j < 3; ++j)
            b.coords[j] += t * dir[j];
        Line3 from_b = make_line3(b, dir);
        r.expect(is_legendrian(from_a) == is_legendrian(from_b),
                 "anchor choice changed is_legendrian at line " + std::to_string(i));
    }
    for (int i = 0; i < planes; ++i) {
        RVec n = {Rational(uniform_int(rng, -9, 9)), Rational(uniform_int(rng, -9, 9)),
                  Rational(uniform_int(rng, 1, 9))};
        Plane3 plane = plane_from_normal_offset(n, Rational(uniform_int(rng, -20, 20)));
        Point p = legendrian_point(plane);
        r.expect(point_on_plane(p, plane), "legendrian point off its plane");
        // every in-plane direction through the Legendrian point is Legendrian
        PlaneSlopeForm s = slope_form(plane);
        RVec d1 = {Rational(1), Rational(0), s.u};
        RVec d2 = {Rational(0), Rational(1), s.v};
        for (int j = 0; j < 5; ++j) {
            Rational alpha(uniform_int(rng, -5, 5)), beta(uniform_int(rng, -5, 5));
            if (alpha == 0 && beta == 0)
                continue;
            RVec dir(3);
            for (int c = 0; c < 3; ++c)
                dir[c] = alpha * d1[c] + beta * d2[c];
            r.expect(is_legendrian(make_line3(p, dir)), "in-plane line through Legendrian point fails");
        }
        // other points: exactly one in-plane Legendrian line
        for (int j = 0; j < 5; ++j) {
            Point q = p;
            Rational alpha(uniform_int(rng, -5, 5)), beta(uniform_int(rng, -5, 5));
            if (alpha == 0 && beta == 0)
                continue;
            for (int c = 0; c < 3; ++c)
                q.coords[c] += alpha * d1[c] + beta * d2[c];
            auto line = legendrian_line_at(q, plane);
            r.expect(line.has_value(), "missing Legendrian line at non-special point");
            if (line) {
                r.expect(is_legendrian(*line), "legendrian_line_at returned non-Legendrian line");
                r.expect(contains(plane_to_flat(plane), line_to_flat(*line)),
                         "legendrian_line_at returned out-of-plane line");
                r.expect(contains_point(line_to_flat(*line), q), "line misses its defining point");
            }
        }
    }
    return r;
}

// Section + projection preserve two-level incidence counts for generic seeds.
inline SuiteResult section_suite(std::uint64_t seed, int instances) {
    SuiteResult r{"generic-section-projection"};
    Rng rng(seed);
    for (int i = 0; i < instances; ++i) {
        int d = 4 + static_cast<int>(uniform_int(rng, 0, 1));
        int j = static_cast<int>(uniform_int(rng, 1, 2));
        LayeredFamily fam = random_layered_family(rng, d, 6, {j, j + 1});
        std::vector<Flat> all = fam.levels[0].flats;
        all.insert(all.end(), fam.levels[1].flats.begin(), fam.levels[1].flats.end());
        const std::size_t n_low = fam.levels[0].flats.size();
        auto count_pairs = [&](const std::vector<Flat>& flats) {
            std::size_t edges = 0;
            for (std::size_t a = 0; a < n_low; ++a)
                for (std::size_t b = n_low; b < flats.size(); ++b)
                    edges += contains(flats[b], flats[a]) ? 1 : 0;
            return edges;
        };
        const std::size_t before = count_pairs(all);
        bool done = false;
        for (int attempt = 0; attempt < 16 && !done; ++attempt) {
            auto sec = generic_section(all, d - j, detail::derive_seed(seed, 1000 + 16 * i + attempt));
            if (!sec.ok)
                continue;
            auto proj = generic_projection(sec.images, 2, detail::derive_seed(seed, 8000 + 16 * i + attempt));
            if (!proj.ok)
                continue;
            r.expect(count_pairs(sec.images) == before, "section changed the incidence count");
            r.expect(count_pairs(proj.images) == before, "projection changed the incidence count");
            done = true;
        }
        r.expect(done, "no generic seed found in 16 attempts at instance " + std::to_string(i));
    }
    return r;
}

// Every generator's predicted quantities re-derived through the counting module.
inline SuiteResult predicted_suite(std::uint64_t seed) {
    SuiteResult r{"predicted-vs-counted"};
    Rng rng(seed);
    for (std::int64_t k = 1; k <= 3; ++k)
        for (std::int64_t l = 1; l <= 3; ++l) {
            GeneratedInstance inst = elekes_grid_2d(k, l);
            r.expect(BigInt(inst.family.levels[0].flats.size()) == inst.predicted.at("points"),
                     "elekes point count");
            r.expect(BigInt(inst.family.levels[1].flats.size()) == inst.predicted.at("lines"),
                     "elekes line count");
            r.expect(count_flags_dp(inst.family) == inst.predicted.at("incidences"),
                     "elekes incidence count");
        }
    for (auto [n, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 2}, {12, 3}, {40, 5}}) {
        GeneratedInstance inst = parallel_bundle_3d(n, b);
        r.expect(count_flags_dp(inst.family) == inst.predicted.at("flags"), "bundle flag count");
        auto profile = degree_profile(inst.family.levels[0].flats, inst.family.levels[1].flats,
                                      inst.family.levels[2].flats);
        r.expect(profile.cells.size() == 1 &&
                     profile.cells.count({static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(b)}) == 1,
                 "bundle degree profile should be a single cell");
    }
    for (std::int64_t l = 1; l <= 2; ++l) {
        GeneratedInstance inst = grid_construction_3d(l * l, l);
        r.expect(BigInt(inst.family.levels[0].flats.size()) == inst.predicted.at("points"),
                 "grid |P|");
        r.expect(BigInt(inst.family.levels[1].flats.size()) == inst.predicted.at("lines"),
                 "grid |L|");
    }
    {
        GeneratedInstance planar = elekes_grid_2d(2, 1);
        BigInt before = count_flags_dp(planar.family);
        GeneratedInstance lifted = lift_to_flats(planar, 4, 1, seed);
        r.expect(count_flags_dp(lifted.family) == before, "lift changed the incidence count");
    }
    {
        auto lines = lightlike_family(6, 3, seed);
        std::vector<Point> pts;
        std::vector<Flat> flats;
        for (const Line3& line : lines) {
            flats.push_back(line_to_flat(line));
            pts.push_back(line.anchor);
        }
        for (std::size_t a = 0; a < flats.size(); ++a)
            for (std::size_t b = a + 1; b < flats.size(); ++b) {
                auto m = meet(flats[a], flats[b]);
                if (m && m->dim() == 0)
                    pts.push_back(m->anchor());
            }
        r.expect(max_coplanar_through_point(pts, flats) <= 2, "light-like family exceeded b = 2");
    }
    {
        auto lines = legendrian_family(2, 2, seed);
        for (const Line3& line : lines)
            r.expect(is_legendrian(line), "legendrian_family emitted a non-Legendrian line");
    }
    return r;
}

// Scope names: oracle, eqsum, duality, legendrian, section, predicted.
inline std::vector<SuiteResult> verify_suite(const std::set<std::string>& scopes, std::uint64_t seed,
                                             int instances = 50) {
    auto wanted = [&](const std::string& name) { return scopes.empty() || scopes.count(name) > 0; };
    std::vector<SuiteResult> results;
    if (wanted("oracle"))
        results.push_back(oracle_suite(seed, instances));
    if (wanted("eqsum"))
        results.push_back(eqsum_suite(seed + 1, std::max(1, instances / 2)));
    if (wanted("duality"))
        results.push_back(duality_suite(seed + 2, std::max(1, instances / 2)));
    if (wanted("legendrian"))
        results.push_back(legendrian_suite(seed + 3, 4 * instances, instances));
    if (wanted("section"))
        results.push_back(section_suite(seed + 4, std::max(1, instances / 3)));
    if (wanted("predicted"))
        results.push_back(predicted_suite(seed + 5));
    return results;
}

} // namespace flagforge
