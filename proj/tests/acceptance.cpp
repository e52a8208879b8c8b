// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// nonzero exit if anything fails. Each criterion also carries a wall-clock
// budget that is enforced.

#include "flagforge/bounds.hpp"
#include "flagforge/constructions.hpp"
#include "flagforge/counting.hpp"
#include "flagforge/duality.hpp"
#include "flagforge/experiment.hpp"
#include "flagforge/generic_maps.hpp"
#include "flagforge/instances.hpp"
#include "flagforge/legendrian.hpp"
#include "flagforge/tuples.hpp"
#include "flagforge/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace flagforge;

namespace {

struct Checker {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (notes.size() < 8)
                notes.push_back(what);
        }
    }
};

int g_failed_criteria = 0;

void run_criterion(int id, const std::string& label, double time_limit_s,
                   const std::function<void(Checker&)>& body) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(elapsed < time_limit_s, "runtime " + std::to_string(elapsed) + "s exceeds budget");
    const bool pass = c.failures == 0;
    if (!pass)
        ++g_failed_criteria;
    std::printf("%s criterion %d: %s (%d/%d checks, %.1fs < %.0fs)\n", pass ? "PASS" : "FAIL", id,
                label.c_str(), c.checks - c.failures, c.checks, elapsed, time_limit_s);
    for (const std::string& note : c.notes)
        std::printf("       - %s\n", note.c_str());
    std::fflush(stdout);
}

std::string tuple_str(const ExponentTuple& t) { return tuple_label(t); }

} // namespace

// --- criterion bodies -------------------------------------------------------

static void criterion1_tuple_grammar(Checker& c) {
    auto d2 = valid_exponent_tuples(2);
    c.expect(d2.size() == 3, "d=2 should give 3 tuples, got " + std::to_string(d2.size()));

    auto d3 = valid_exponent_tuples(3);
    c.expect(d3.size() == 4, "d=3 should give 4 tuples");
    auto has = [](const std::vector<ExponentTuple>& ts, std::initializer_list<int> code) {
        ExponentTuple t;
        for (int v : code)
            t.push_back(static_cast<Exponent>(v));
        return std::count(ts.begin(), ts.end(), t) == 1;
    };
    // Theorem 6 terms: |P|^{2/3}|L|^{2/3}, |L|^{2/3}|S|^{2/3}, |P||S|, |L|
    c.expect(has(d3, {1, 1, 0}), "missing (2/3,2/3,0)");
    c.expect(has(d3, {0, 1, 1}), "missing (0,2/3,2/3)");
    c.expect(has(d3, {2, 0, 2}), "missing (1,0,1)");
    c.expect(has(d3, {0, 2, 0}), "missing (0,1,0)");

    auto d4 = valid_exponent_tuples(4);
    c.expect(d4.size() == 6, "d=4 should give 6 tuples");
    c.expect(has(d4, {1, 1, 0, 2}), "missing (2/3,2/3,0,1)");
    c.expect(has(d4, {2, 0, 1, 1}), "missing (1,0,2/3,2/3)");
    c.expect(has(d4, {2, 0, 2, 0}), "missing (1,0,1,0)");
    c.expect(has(d4, {2, 0, 0, 2}), "missing (1,0,0,1)");
    c.expect(has(d4, {0, 2, 0, 2}), "missing (0,1,0,1)");
    c.expect(has(d4, {0, 1, 1, 0}), "missing (0,2/3,2/3,0)");

    for (int d = 1; d <= 12; ++d)
        c.expect(valid_exponent_tuples(d) == exponent_tuples_bruteforce(d),
                 "grammar != brute force at d=" + std::to_string(d));
}

static void criterion2_oracle_equivalence(Checker& c) {
    Rng rng(20240001);
    for (int i = 0; i < 200; ++i) {
        int d = 2 + static_cast<int>(uniform_int(rng, 0, 2));
        LayeredFamily fam = random_layered_family(rng, d, 25);
        BigInt dp = count_flags_dp(fam);
        BigInt brute = count_flags_bruteforce(fam);
        c.expect(dp == brute,
                 "mismatch at instance " + std::to_string(i) + ": dp=" + dp.str() + " brute=" + brute.str());
    }
}

static void criterion3_eqsum(Checker& c) {
    Rng rng(20240002);
    for (int i = 0; i < 50; ++i) {
        int d = (i % 2 == 0) ? 3 : 4;
        LayeredFamily fam = random_layered_family(rng, d, 12);
        ContainmentGraph graph = containment_graph(fam);
        BigInt total = count_flags_dp(fam, graph);
        for (std::size_t lvl = 1; lvl + 1 < fam.levels.size(); ++lvl) {
            auto split = degree_split(fam, lvl, graph);
            BigInt sum = count_flags_dp(replace_level(fam, lvl, split.s0)) +
                         count_flags_dp(replace_level(fam, lvl, split.s1)) +
                         count_flags_dp(replace_level(fam, lvl, split.s2));
            c.expect(sum == total, "eq:sum failed at instance " + std::to_string(i) + " level " +
                                       std::to_string(lvl));
        }
    }
}

static void criterion4_construction_exactness(Checker& c) {
    for (std::int64_t k = 1; k <= 5; ++k)
        for (std::int64_t l = 1; l <= 5; ++l) {
            GeneratedInstance inst = elekes_grid_2d(k, l);
            BigInt incid = count_flags_dp(inst.family);
            c.expect(incid == BigInt(k) * k * l * l, "elekes(" + std::to_string(k) + "," +
                                                         std::to_string(l) + ") incidences " +
                                                         incid.str());
        }
    for (auto [n, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{12, 3}, {40, 5}, {64, 8}}) {
        GeneratedInstance inst = parallel_bundle_3d(n, b);
        BigInt flags = count_flags_dp(inst.family);
        c.expect(flags == BigInt(b) * n,
                 "bundle(" + std::to_string(n) + "," + std::to_string(b) + ") flags " + flags.str());
    }
    for (std::int64_t l = 1; l <= 3; ++l) {
        std::int64_t k = l * l;
        GeneratedInstance inst = grid_construction_3d(k, l);
        c.expect(BigInt(inst.family.levels[0].flats.size()) == BigInt(4) * k * k * k * l * l,
                 "grid |P| wrong at l=" + std::to_string(l));
        c.expect(BigInt(inst.family.levels[1].flats.size()) == BigInt(k) * k * l * l * l * l,
                 "grid |L| wrong at l=" + std::to_string(l));
    }
}

static void criterion5_grid_tightness(Checker& c) {
    std::vector<double> xs, ys, ratios;
    for (std::int64_t l = 2; l <= 4; ++l) {
        std::int64_t k = l * l;
        GeneratedInstance inst = grid_construction_3d(k, l);
        ContainmentGraph graph = containment_graph(inst.family);
        BigInt count = count_flags_dp(inst.family, graph);
        std::uint64_t b = detail::max_line_degree(inst.family, graph);
        double p = static_cast<double>(inst.family.levels[0].flats.size());
        double lines = static_cast<double>(inst.family.levels[1].flats.size());
        double s = static_cast<double>(inst.family.levels[2].flats.size());
        BoundValue bound = flags3d_restricted_bound(p, lines, s, static_cast<double>(b));
        double n = std::pow(static_cast<double>(l), 8.0);
        double cnt = count.convert_to<double>();
        xs.push_back(n);
        ys.push_back(cnt);
        c.expect(bound.value > 0, "bound vanished at l=" + std::to_string(l));
        ratios.push_back(cnt / bound.value);
        std::printf("       grid l=%lld: N=%.0f |P|=%.0f |L|=%.0f |S|=%.0f b=%llu count=%s bound=%.3g\n",
                    static_cast<long long>(l), n, p, lines, s, static_cast<unsigned long long>(b),
                    count.str().c_str(), bound.value);
    }
    FitResult fit = fit_exponent(xs, ys);
    c.expect(fit.slope >= 1.35 && fit.slope <= 1.65,
             "slope " + std::to_string(fit.slope) + " outside [1.35, 1.65]");
    double big_c = 0;
    for (double r : ratios)
        big_c = std::max(big_c, r);
    c.expect(big_c > 0 && std::isfinite(big_c), "no finite constant C");
    for (std::size_t i = 0; i < ratios.size(); ++i)
        c.expect(ys[i] <= big_c * (ys[i] / ratios[i]) * (1 + 1e-12), "count exceeds C*bound");
    std::printf("       fit slope=%.4f r2=%.6f, single constant C=%.4f\n", fit.slope, fit.r_squared,
                big_c);
}

static void criterion6_lower_bound_witnesses(Checker& c) {
    for (int d : {3, 4}) {
        for (const ExponentTuple& tuple : valid_exponent_tuples(d)) {
            std::vector<int> nonzero;
            for (int i = 0; i < d; ++i)
                if (tuple[i] != Exponent::Zero)
                    nonzero.push_back(i);
            std::vector<std::int64_t> choices = {4, 9, 16};
            std::vector<std::size_t> pick(nonzero.size(), 0);
            for (;;) {
                std::vector<std::int64_t> sizes(d, 1);
                for (std::size_t j = 0; j < nonzero.size(); ++j)
                    sizes[nonzero[j]] = choices[pick[j]];
                double target = 1.0;
                for (int i = 0; i < d; ++i)
                    target *= std::pow(static_cast<double>(sizes[i]), exponent_value(tuple[i]));
                GeneratedInstance inst =
                    flag_lower_bound_construction(tuple, sizes, d, 424200 + d * 100);
                BigInt count = count_flags_dp(inst.family);
                bool ok = count.convert_to<double>() >= 0.01 * target;
                std::ostringstream msg;
                msg << "tuple " << tuple_str(tuple) << " sizes(";
                for (int i = 0; i < d; ++i)
                    msg << (i ? "," : "") << sizes[i];
                msg << "): count " << count.str() << " < 0.01 * " << target;
                c.expect(ok, msg.str());
                // odometer over the nonzero slots
                std::size_t j = 0;
                while (j < pick.size() && ++pick[j] == choices.size()) {
                    pick[j] = 0;
                    ++j;
                }
                if (j == pick.size())
                    break;
                if (pick.empty())
                    break;
            }
        }
    }
}

static void criterion7_legendrian_laws(Checker& c) {
    Rng rng(20240007);
    for (int i = 0; i < 500; ++i) {
        Point a = random_point(rng, 3, 100);
        RVec dir(3);
        do {
            for (auto& x : dir)
                x = Rational(uniform_int(rng, -9, 9));
        } while (is_zero_vec(dir));
        Point b = a;
        Rational t(uniform_int(rng, 1, 9));
        for (int j = 0; j < 3; ++j)
            b.coords[j] += t * dir[j];
        Line3 la{a, primitive_integer_row(dir)};
        Line3 lb{b, primitive_integer_row(dir)};
        c.expect(is_legendrian(la) == is_legendrian(lb), "anchor dependence at line " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
        RVec n = {Rational(uniform_int(rng, -9, 9)), Rational(uniform_int(rng, -9, 9)),
                  Rational(uniform_int(rng, 1, 9))};
        Plane3 plane = plane_from_normal_offset(n, Rational(uniform_int(rng, -30, 30)));
        Point p = legendrian_point(plane);
        c.expect(point_on_plane(p, plane), "legendrian point off plane at " + std::to_string(i));
        PlaneSlopeForm s = slope_form(plane);
        RVec d1 = {Rational(1), Rational(0), s.u};
        RVec d2 = {Rational(0), Rational(1), s.v};
        int lines_made = 0;
        while (lines_made < 20) {
            Rational alpha(uniform_int(rng, -7, 7)), beta(uniform_int(rng, -7, 7));
            if (alpha == 0 && beta == 0)
                continue;
            RVec dir(3);
            for (int j = 0; j < 3; ++j)
                dir[j] = alpha * d1[j] + beta * d2[j];
            c.expect(is_legendrian(make_line3(p, dir)),
                     "in-plane line through Legendrian point not Legendrian");
            ++lines_made;
        }
        int points_made = 0;
        while (points_made < 20) {
            Rational alpha(uniform_int(rng, -7, 7)), beta(uniform_int(rng, -7, 7));
            if (alpha == 0 && beta == 0)
                continue;
            Point q = p;
            for (int j = 0; j < 3; ++j)
                q.coords[j] += alpha * d1[j] + beta * d2[j];
            auto line = legendrian_line_at(q, plane);
            c.expect(line.has_value(), "no Legendrian line at ordinary point");
            if (line) {
                c.expect(is_legendrian(*line), "returned line fails the predicate");
                Flat lf = line_to_flat(*line);
                c.expect(contains(plane_to_flat(plane), lf), "returned line leaves the plane");
                c.expect(contains_point(lf, q), "returned line misses the point");
                // uniqueness: any in-plane line through q with a different
                // direction must be non-Legendrian
                RVec other = {line->direction[1] == 0 ? Rational(1) : Rational(0),
                              line->direction[1] == 0 ? Rational(0) : Rational(1), Rational(0)};
                other[2] = s.u * other[0] + s.v * other[1];
                Line3 alt = make_line3(q, other);
                if (alt.direction != line->direction)
                    c.expect(!is_legendrian(alt), "second Legendrian line through ordinary point");
            }
            ++points_made;
        }
    }
}

static void criterion8_duality_transport(Checker& c) {
    Rng rng(20240008);
    for (int i = 0; i < 50; ++i) {
        LayeredFamily fam = random_layered_family(rng, 3, 15);
        LayeredFamily usable = rotate_until_dualizable(fam, rng);
        BigInt primal = count_flags_dp(usable);
        BigInt dual = count_flags_dp(dualize_family_3d(usable));
        c.expect(primal == dual, "count changed under duality at instance " + std::to_string(i) +
                                     ": " + primal.str() + " vs " + dual.str());
    }
}

static void criterion9_lemma5_mechanics(Checker& c) {
    Rng rng(20240009);
    int trials = 0, failures_seeds = 0;
    for (int i = 0; i < 30; ++i) {
        int d = (i % 2 == 0) ? 4 : 5;
        int j = 1 + static_cast<int>(uniform_int(rng, 0, d - 3));
        LayeredFamily fam = random_layered_family(rng, d, 8, {j, j + 1});
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
        const std::size_t before = incidences(all);
        const int seeds_here = (i < 10) ? 4 : 3; // 30 instances, 100 seeds total
        for (int t = 0; t < seeds_here; ++t) {
            ++trials;
            std::uint64_t seed = 777000 + 100 * i + t;
            auto sec = generic_section(all, d - j, seed);
            if (!sec.ok) {
                ++failures_seeds;
                continue;
            }
            auto proj = generic_projection(sec.images, 2, seed + 50);
            if (!proj.ok) {
                ++failures_seeds;
                continue;
            }
            c.expect(incidences(sec.images) == before,
                     "section changed count at instance " + std::to_string(i));
            c.expect(incidences(proj.images) == before,
                     "projection changed count at instance " + std::to_string(i));
        }
    }
    c.expect(trials == 100, "expected 100 seed trials, ran " + std::to_string(trials));
    c.expect(failures_seeds * 20 < trials, "genericity failure rate " + std::to_string(failures_seeds) +
                                               "% is not below 5%");
}

static void criterion10_lightlike_hypothesis(Checker& c) {
    for (auto [nd, lpd, seed] : std::vector<std::tuple<std::int64_t, std::int64_t, std::uint64_t>>{
             {4, 3, 1}, {6, 4, 2}, {10, 2, 3}, {3, 8, 4}}) {
        auto lines = lightlike_family(nd, lpd, seed);
        std::vector<Flat> flats;
        std::vector<Point> pts;
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
        std::uint64_t coplanar = max_coplanar_through_point(pts, flats);
        c.expect(coplanar <= 2, "family (" + std::to_string(nd) + "," + std::to_string(lpd) +
                                    ") has " + std::to_string(coplanar) + " coplanar concurrent lines");
    }
}

int main() {
    std::printf("flagforge acceptance suite\n");
    run_criterion(1, "tuple grammar golden tests and brute-force equality (d <= 12)", 5,
                  criterion1_tuple_grammar);
    run_criterion(2, "oracle equivalence on 200 random instances", 60, criterion2_oracle_equivalence);
    run_criterion(3, "degree-split decomposition identity on 50 instances", 60, criterion3_eqsum);
    run_criterion(4, "construction exactness (elekes, bundle, grid)", 120,
                  criterion4_construction_exactness);
    run_criterion(5, "grid tightness: N^{3/2} exponent and restricted bound", 600,
                  criterion5_grid_tightness);
    run_criterion(6, "flag lower-bound witnesses for all d=3,4 tuples", 120,
                  criterion6_lower_bound_witnesses);
    run_criterion(7, "Legendrian laws (500 lines, 100 planes)", 30, criterion7_legendrian_laws);
    run_criterion(8, "duality transport on 50 instances", 60, criterion8_duality_transport);
    run_criterion(9, "generic section/projection preserves counts", 60, criterion9_lemma5_mechanics);
    run_criterion(10, "light-like families satisfy the coplanarity hypothesis", 30,
                  criterion10_lightlike_hypothesis);
    if (g_failed_criteria > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failed_criteria);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
