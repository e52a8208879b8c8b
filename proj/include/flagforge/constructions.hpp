#pragma once

#include "flagforge/counting.hpp"
#include "flagforge/errors.hpp"
#include "flagforge/family.hpp"
#include "flagforge/legendrian.hpp"
#include "flagforge/random.hpp"
#include "flagforge/tuples.hpp"
#include "flagforge/views3.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace flagforge {

struct ConstructionSpec {
    std::string kind;
    std::map<std::string, std::int64_t> params;
    std::uint64_t seed = 0;
};

// A generated family together with the exact quantities the construction
// guarantees; tests re-derive each one through the counting module.
struct GeneratedInstance {
    LayeredFamily family;
    std::map<std::string, BigInt> predicted;
};

namespace detail {

inline Point int_point(std::initializer_list<std::int64_t> coords) {
    RVec c;
    for (auto v : coords)
        c.emplace_back(v);
    return Point(std::move(c));
}

// Random point of a flat: anchor plus a random integer combination of the
// direction rows.
inline Point random_point_on(Rng& rng, const Flat& f, std::int64_t range = kGenericCoordRange) {
    Point p = f.anchor();
    for (const RVec& dir : f.directions()) {
        Rational c = random_coord(rng, range);
        for (std::size_t j = 0; j < p.coords.size(); ++j)
            p.coords[j] += c * dir[j];
    }
    return p;
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t s = seed ^ (salt * 0x9E3779B97F4A7C15ull + 0x517CC1B727220A95ull);
    return splitmix64(s);
}

} // namespace detail

// Elekes' planar configuration: P = [1,k] x [1,2kl], L = { y = ax+b } with
// a in [1,l], b in [1,kl]. Every line meets exactly k grid points, so the
// incidence count is k^2 l^2 on 2k^2 l points and k l^2 lines.
inline GeneratedInstance elekes_grid_2d(std::int64_t k, std::int64_t l) {
    if (k < 1 || l < 1)
        throw std::invalid_argument("elekes_grid_2d: k, l must be >= 1");
    GeneratedInstance out;
    out.family.ambient_dim = 2;
    Level points{0, {}};
    for (std::int64_t x = 1; x <= k; ++x)
        for (std::int64_t y = 1; y <= 2 * k * l; ++y)
            points.flats.push_back(flat_from_point(detail::int_point({x, y})));
    Level lines{1, {}};
    for (std::int64_t a = 1; a <= l; ++a)
        for (std::int64_t b = 1; b <= k * l; ++b)
            lines.flats.push_back(flat_from_anchor_and_directions(detail::int_point({0, b}),
                                                                  {{Rational(1), Rational(a)}}));
    out.family.levels = {std::move(points), std::move(lines)};
    out.family.validate();
    out.predicted["points"] = BigInt(2) * k * k * l;
    out.predicted["lines"] = BigInt(k) * l * l;
    out.predicted["incidences"] = BigInt(k) * k * l * l;
    out.predicted["points_per_line"] = k;
    return out;
}

// Lifts a planar two-level instance into Q^d at levels (i, i+1): each planar
// object is joined with a generic (i-1)-flat Q. Containments and counts are
// preserved; distinctness and dimensions are verified, with a retry inside.
//
// `pivot` overrides Q and `inside` confines the embedded plane, which is how
// the flag lower-bound construction threads the lift between two chain flats.
inline GeneratedInstance lift_to_flats(const GeneratedInstance& planar, int d, int i, std::uint64_t seed,
                                       std::optional<Flat> pivot = std::nullopt,
                                       std::optional<Flat> inside = std::nullopt) {
    if (planar.family.levels.size() != 2 || planar.family.ambient_dim != 2)
        throw std::invalid_argument("lift_to_flats: input must be a planar two-level instance");
    if (i < 0 || i > d - 2)
        throw std::invalid_argument("lift_to_flats: need 0 <= i <= d-2");
    if (pivot && pivot->dim() != i - 1)
        throw std::invalid_argument("lift_to_flats: pivot must be an (i-1)-flat");

    const auto& planar_points = planar.family.levels[0].flats;
    const auto& planar_lines = planar.family.levels[1].flats;
    const BigInt incidences = BigInt(detail::scan_level_pair(planar_points, planar_lines).edges.size());

    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(detail::derive_seed(seed, attempt));
        // affine embedding of Q^2 onto a 2-plane (inside the container if given)
        Point origin = inside ? detail::random_point_on(rng, *inside) : random_point(rng, d);
        RMat frame(2);
        for (auto& dir : frame) {
            Point q = inside ? detail::random_point_on(rng, *inside) : random_point(rng, d);
            dir.resize(d);
            for (int j = 0; j < d; ++j)
                dir[j] = q.coords[j] - origin.coords[j];
        }
        auto embed = [&](const Point& p) {
            RVec c = origin.coords;
            for (int j = 0; j < d; ++j)
                c[j] += p.coords[0] * frame[0][j] + p.coords[1] * frame[1][j];
            return Point(std::move(c));
        };

        std::optional<Flat> q = pivot;
        if (!q && i >= 1)
            q = random_flat(rng, d, i - 1);

        auto lift_one = [&](const Flat& f, int target_dim) -> std::optional<Flat> {
            std::vector<Point> pts;
            for (const Point& p : f.spanning_points())
                pts.push_back(embed(p));
            Flat embedded = flat_from_points(pts, d);
            Flat lifted = q ? join(embedded, *q) : embedded;
            if (lifted.dim() != target_dim)
                return std::nullopt;
            return lifted;
        };

        GeneratedInstance out;
        out.family.ambient_dim = d;
        Level low{i, {}}, high{i + 1, {}};
        bool bad = false;
        for (const Flat& f : planar_points) {
            auto lifted = lift_one(f, i);
            if (!lifted) {
                bad = true;
                break;
            }
            low.flats.push_back(std::move(*lifted));
        }
        for (const Flat& f : planar_lines) {
            if (bad)
                break;
            auto lifted = lift_one(f, i + 1);
            if (!lifted) {
                bad = true;
                break;
            }
            high.flats.push_back(std::move(*lifted));
        }
        if (bad)
            continue;
        if (dedupe_flats(low.flats).size() != low.flats.size() ||
            dedupe_flats(high.flats).size() != high.flats.size())
            continue;
        out.family.levels = {std::move(low), std::move(high)};
        // genericity also requires that no spurious containment appeared
        BigInt lifted_incidences{detail::scan_level_pair(out.family.levels[0].flats,
                                                         out.family.levels[1].flats)
                                     .edges.size()};
        if (lifted_incidences != incidences)
            continue;
        out.family.validate();
        out.predicted = planar.predicted;
        out.predicted["incidences"] = incidences;
        out.predicted["level_" + std::to_string(i) + "_size"] = BigInt(planar_points.size());
        out.predicted["level_" + std::to_string(i + 1) + "_size"] = BigInt(planar_lines.size());
        return out;
    }
    throw GenericityError("lift_to_flats: no generic draw found");
}

namespace detail {

// Largest Elekes configuration fitting inside prescribed sizes: maximize
// k^2 l^2 subject to 2 k^2 l <= m and k l^2 <= n.
inline std::pair<std::int64_t, std::int64_t> best_elekes_params(std::int64_t m, std::int64_t n) {
    std::pair<std::int64_t, std::int64_t> best{0, 0};
    std::int64_t best_score = -1;
    for (std::int64_t k = 1; 2 * k * k <= m; ++k)
        for (std::int64_t l = 1; 2 * k * k * l <= m && k * l * l <= n; ++l) {
            std::int64_t score = k * k * l * l;
            if (score > best_score) {
                best_score = score;
                best = {k, l};
            }
        }
    return best;
}

// Pads a planar instance with extra points/lines up to the exact sizes.
inline GeneratedInstance padded_elekes(Rng& rng, std::int64_t m, std::int64_t n) {
    GeneratedInstance inst;
    auto [k, l] = best_elekes_params(m, n);
    if (k >= 1) {
        inst = elekes_grid_2d(k, l);
    } else {
        // m == 1: a single point with n lines through it still gives n incidences
        inst.family.ambient_dim = 2;
        inst.family.levels = {Level{0, {flat_from_point(int_point({0, 0}))}}, Level{1, {}}};
        for (std::int64_t a = 0; a < n; ++a)
            inst.family.levels[1].flats.push_back(
                flat_from_anchor_and_directions(int_point({0, 0}), {{Rational(1), Rational(a)}}));
        inst.predicted["incidences"] = n;
    }
    auto& points = inst.family.levels[0].flats;
    auto& lines = inst.family.levels[1].flats;
    std::set<Flat> point_set(points.begin(), points.end());
    while (static_cast<std::int64_t>(points.size()) < m) {
        Flat p = flat_from_point(random_point(rng, 2, 1000 + m));
        if (point_set.insert(p).second)
            points.push_back(p);
    }
    std::set<Flat> line_set(lines.begin(), lines.end());
    while (static_cast<std::int64_t>(lines.size()) < n) {
        Flat cand = random_flat(rng, 2, 1, 1000 + n);
        if (line_set.insert(cand).second)
            lines.push_back(cand);
    }
    inst.family.validate();
    inst.predicted.clear(); // padding may add incidences; callers recount
    return inst;
}

} // namespace detail

// Witness configuration for one exponent tuple: a nested generic chain on the
// zero slots, pencils through the chain on the solitary-1 slots, and lifted
// planar configurations on the 2/3 pairs. The flag count is at least the
// product of the per-slot contributions, recorded as predicted["guaranteed_flags"].
inline GeneratedInstance flag_lower_bound_construction(const ExponentTuple& tuple,
                                                       const std::vector<std::int64_t>& sizes, int d,
                                                       std::uint64_t seed) {
    if (static_cast<int>(tuple.size()) != d || static_cast<int>(sizes.size()) != d)
        throw std::invalid_argument("flag_lower_bound_construction: tuple/sizes must have length d");
    if (!is_valid_exponent_tuple(tuple))
        throw std::invalid_argument("flag_lower_bound_construction: invalid exponent tuple");
    for (std::int64_t s : sizes)
        if (s < 1)
            throw std::invalid_argument("flag_lower_bound_construction: sizes must be >= 1");

    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(detail::derive_seed(seed, 0x10000 + attempt));
        // nested generic chain pi_0 c pi_1 c ... c pi_{d-1}
        std::vector<Point> chain_points;
        for (int t = 0; t < d; ++t)
            chain_points.push_back(random_point(rng, d));
        std::vector<Flat> chain;
        bool bad = false;
        for (int t = 0; t < d && !bad; ++t) {
            chain.push_back(flat_from_points(
                std::vector<Point>(chain_points.begin(), chain_points.begin() + t + 1), d));
            bad = chain.back().dim() != t;
        }
        if (bad)
            continue;

        LayeredFamily family;
        family.ambient_dim = d;
        family.levels.resize(d);
        BigInt guaranteed = 1;

        try {
            for (int t = 0; t < d; ++t) {
                family.levels[t].dim = t;
                if (tuple[t] == Exponent::Zero) {
                    std::set<Flat> level{chain[t]};
                    while (static_cast<std::int64_t>(level.size()) < sizes[t])
                        level.insert(random_flat(rng, d, t));
                    family.levels[t].flats.assign(level.begin(), level.end());
                } else if (tuple[t] == Exponent::One) {
                    std::set<Flat> level;
                    int guard = 0;
                    while (static_cast<std::int64_t>(level.size()) < sizes[t]) {
                        if (++guard > 64 * sizes[t] + 64)
                            throw GenericityError("pencil generation stalled");
                        Point x = t + 1 < d ? detail::random_point_on(rng, chain[t + 1])
                                            : random_point(rng, d);
                        Flat f = t >= 1 ? join(chain[t - 1], flat_from_point(x)) : flat_from_point(x);
                        if (f.dim() == t)
                            level.insert(f);
                    }
                    family.levels[t].flats.assign(level.begin(), level.end());
                    guaranteed *= sizes[t];
                } else if (t + 1 < d && tuple[t + 1] == Exponent::TwoThirds &&
                           (t == 0 || tuple[t - 1] != Exponent::TwoThirds)) {
                    // leading element of a 2/3 pair at (t, t+1)
                    GeneratedInstance planar = detail::padded_elekes(rng, sizes[t], sizes[t + 1]);
                    BigInt incid = count_flags_dp(planar.family);
                    std::optional<Flat> pivot =
                        t >= 1 ? std::optional<Flat>(chain[t - 1]) : std::nullopt;
                    std::optional<Flat> inside =
                        t + 2 < d ? std::optional<Flat>(chain[t + 2]) : std::nullopt;
                    GeneratedInstance lifted =
                        lift_to_flats(planar, d, t, detail::derive_seed(seed, 0x20000 + attempt), pivot,
                                      inside);
                    family.levels[t].flats = lifted.family.levels[0].flats;
                    family.levels[t + 1].dim = t + 1;
                    family.levels[t + 1].flats = lifted.family.levels[1].flats;
                    guaranteed *= incid;
                    ++t; // consumed both slots of the pair
                }
            }
            family.validate();
        } catch (const GenericityError&) {
            continue;
        } catch (const std::invalid_argument&) {
            continue; // e.g. duplicate flats across construction pieces
        }

        GeneratedInstance out;
        out.family = std::move(family);
        out.predicted["guaranteed_flags"] = guaranteed;
        return out;
    }
    throw GenericityError("flag_lower_bound_construction: no generic draw found");
}

// The 3D grid of §-style parameters: P = [1,k] x [1,2kl]^2,
// L = { y = ax+b, z = cx+d : a,c in [1,l], b,d in [1,kl] }, and S the set of
// distinct planes spanned by pairs of concurrent lines. |P| = 4 k^3 l^2 and
// |L| = k^2 l^4 exactly; |S| is emitted as data.
inline GeneratedInstance grid_construction_3d(std::int64_t k, std::int64_t l) {
    if (k < 1 || l < 1)
        throw std::invalid_argument("grid_construction_3d: k, l must be >= 1");
    GeneratedInstance out;
    out.family.ambient_dim = 3;

    Level points{0, {}};
    for (std::int64_t x = 1; x <= k; ++x)
        for (std::int64_t y = 1; y <= 2 * k * l; ++y)
            for (std::int64_t z = 1; z <= 2 * k * l; ++z)
                points.flats.push_back(flat_from_point(detail::int_point({x, y, z})));

    Level lines{1, {}};
    for (std::int64_t a = 1; a <= l; ++a)
        for (std::int64_t b = 1; b <= k * l; ++b)
            for (std::int64_t c = 1; c <= l; ++c)
                for (std::int64_t e = 1; e <= k * l; ++e)
                    lines.flats.push_back(flat_from_anchor_and_directions(
                        detail::int_point({0, b, e}), {{Rational(1), Rational(a), Rational(c)}}));

    // planes spanned by concurrent line pairs, deduplicated by primitive
    // (normal, offset); normals are (ac'-a'c, c-c', a'-a)
    struct Key {
        std::int64_t n0, n1, n2, off;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = 0x9E3779B97F4A7C15ull;
            for (std::int64_t v : {k.n0, k.n1, k.n2, k.off}) {
                h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };
    std::unordered_set<Key, KeyHash> plane_keys;
    std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
    for (std::int64_t x = 1; x <= k; ++x)
        for (std::int64_t y = 1; y <= 2 * k * l; ++y)
            for (std::int64_t z = 1; z <= 2 * k * l; ++z) {
                dirs.clear();
                for (std::int64_t a = 1; a <= l; ++a) {
                    std::int64_t b = y - a * x;
                    if (b < 1 || b > k * l)
                        continue;
                    for (std::int64_t c = 1; c <= l; ++c) {
                        std::int64_t e = z - c * x;
                        if (e >= 1 && e <= k * l)
                            dirs.emplace_back(a, c);
                    }
                }
                for (std::size_t i = 0; i < dirs.size(); ++i)
                    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
                        auto [a, c] = dirs[i];
                        auto [a2, c2] = dirs[j];
                        std::int64_t n0 = a * c2 - a2 * c, n1 = c - c2, n2 = a2 - a;
                        std::int64_t g = std::gcd(std::gcd(std::abs(n0), std::abs(n1)), std::abs(n2));
                        n0 /= g;
                        n1 /= g;
                        n2 /= g;
                        if (n0 < 0 || (n0 == 0 && (n1 < 0 || (n1 == 0 && n2 < 0)))) {
                            n0 = -n0;
                            n1 = -n1;
                            n2 = -n2;
                        }
                        plane_keys.insert(Key{n0, n1, n2, n0 * x + n1 * y + n2 * z});
                    }
            }
    std::vector<Key> sorted_keys(plane_keys.begin(), plane_keys.end());
    std::sort(sorted_keys.begin(), sorted_keys.end(), [](const Key& a, const Key& b) {
        return std::tie(a.n0, a.n1, a.n2, a.off) < std::tie(b.n0, b.n1, b.n2, b.off);
    });
    Level planes{2, {}};
    for (const Key& key : sorted_keys)
        planes.flats.push_back(plane_to_flat(
            Plane3{ZVec{BigInt(key.n0), BigInt(key.n1), BigInt(key.n2)}, Rational(key.off)}));

    out.predicted["points"] = BigInt(4) * k * k * k * l * l;
    out.predicted["lines"] = BigInt(k) * k * l * l * l * l;
    out.predicted["planes"] = BigInt(planes.flats.size());
    out.predicted["points_per_line"] = k;
    out.family.levels = {std::move(points), std::move(lines), std::move(planes)};
    out.family.validate();
    return out;
}

// N/b lines parallel to the z-axis, each carrying b integer points and b
// pencil planes: exactly bN flags, |P| = |S| = N.
inline GeneratedInstance parallel_bundle_3d(std::int64_t n, std::int64_t b) {
    if (b < 1 || n < 1 || n % b != 0)
        throw std::invalid_argument("parallel_bundle_3d: need b >= 1 and b | N");
    const std::int64_t lines_count = n / b;
    GeneratedInstance out;
    out.family.ambient_dim = 3;
    Level points{0, {}}, lines{1, {}}, planes{2, {}};
    for (std::int64_t j = 1; j <= lines_count; ++j) {
        lines.flats.push_back(flat_from_anchor_and_directions(
            detail::int_point({j, 0, 0}), {{Rational(0), Rational(0), Rational(1)}}));
        for (std::int64_t z = 1; z <= b; ++z)
            points.flats.push_back(flat_from_point(detail::int_point({j, 0, z})));
        for (std::int64_t s = 1; s <= b; ++s)
            planes.flats.push_back(plane_to_flat(
                Plane3{ZVec{BigInt(s), BigInt(-1), BigInt(0)}, Rational(s * j)}));
    }
    out.family.levels = {std::move(points), std::move(lines), std::move(planes)};
    out.family.validate();
    out.predicted["points"] = n;
    out.predicted["lines"] = lines_count;
    out.predicted["planes"] = n;
    out.predicted["flags"] = BigInt(b) * n;
    return out;
}

// Translation scheme for disjoint unions. Default: steps along the first
// coordinate axis by an auto-computed spacing.
struct Separation {
    std::optional<RVec> step; // translation applied c times to copy c
};

namespace detail {

inline Rational coordinate_diameter(const LayeredFamily& family) {
    Rational m = 0;
    for (const Level& lv : family.levels)
        for (const Flat& f : lv.flats)
            for (const Point& p : f.spanning_points())
                for (const Rational& c : p.coords) {
                    Rational a = c < 0 ? Rational(-c) : c;
                    if (a > m)
                        m = a;
                }
    return m;
}

inline Flat translate_flat(const Flat& f, const RVec& offset) {
    Point a = f.anchor();
    for (std::size_t j = 0; j < offset.size(); ++j)
        a.coords[j] += offset[j];
    return flat_from_anchor_and_directions(a, f.directions());
}

} // namespace detail

// Union of `copies` translated copies of a base instance. Cross-copy
// containments are checked, not assumed: any interaction throws.
inline GeneratedInstance disjoint_copies(const GeneratedInstance& base, std::int64_t copies,
                                         const Separation& separation = {}) {
    if (copies < 1)
        throw std::invalid_argument("disjoint_copies: copies must be >= 1");
    const int d = base.family.ambient_dim;
    RVec step(d, Rational(0));
    if (separation.step) {
        step = *separation.step;
    } else {
        step[0] = 2 * detail::coordinate_diameter(base.family) + 1;
    }

    GeneratedInstance out;
    out.family.ambient_dim = d;
    std::vector<std::size_t> level_sizes;
    for (const Level& lv : base.family.levels) {
        out.family.levels.push_back(Level{lv.dim, {}});
        level_sizes.push_back(lv.flats.size());
    }
    for (std::int64_t c = 0; c < copies; ++c) {
        RVec offset(d, Rational(0));
        for (int j = 0; j < d; ++j)
            offset[j] = step[j] * c;
        for (std::size_t lv = 0; lv < base.family.levels.size(); ++lv)
            for (const Flat& f : base.family.levels[lv].flats)
                out.family.levels[lv].flats.push_back(detail::translate_flat(f, offset));
    }
    try {
        out.family.validate(); // catches duplicate flats across copies
    } catch (const std::invalid_argument& e) {
        throw InteractionError(std::string("disjoint_copies: ") + e.what());
    }
    // no containment edge may cross copies
    for (std::size_t lv = 0; lv + 1 < out.family.levels.size(); ++lv) {
        auto edges = detail::scan_level_pair(out.family.levels[lv].flats, out.family.levels[lv + 1].flats);
        for (const auto& [f, g] : edges.edges)
            if (f / level_sizes[lv] != g / level_sizes[lv + 1])
                throw InteractionError("disjoint_copies: cross-copy containment; increase separation");
    }
    for (const auto& [key, value] : base.predicted)
        out.predicted[key] = value * copies;
    return out;
}

// Lines parallel to the double cone z^2 = x^2 + y^2, generated from the
// Pythagorean parametrization (m^2-n^2, 2mn, m^2+n^2) with translated integer
// anchors.
inline std::vector<Line3> lightlike_family(std::int64_t directions, std::int64_t lines_per_direction,
                                           std::uint64_t seed) {
    if (directions < 1 || lines_per_direction < 1)
        throw std::invalid_argument("lightlike_family: counts must be >= 1");
    std::vector<ZVec> dirs;
    std::set<ZVec> seen;
    for (std::int64_t m = 1; static_cast<std::int64_t>(dirs.size()) < directions; ++m) {
        if (m > 4 * directions + 64)
            throw std::invalid_argument("lightlike_family: not enough distinct Pythagorean pairs");
        for (std::int64_t n = 1; n <= m && static_cast<std::int64_t>(dirs.size()) < directions; ++n) {
            RVec raw = {Rational(m * m - n * n), Rational(2 * m * n), Rational(m * m + n * n)};
            ZVec prim = primitive_integer_row(raw);
            if (seen.insert(prim).second)
                dirs.push_back(prim);
        }
    }
    Rng rng(seed);
    std::vector<Line3> out;
    std::set<Flat> dedupe;
    for (const ZVec& dir : dirs) {
        std::int64_t made = 0;
        int guard = 0;
        while (made < lines_per_direction) {
            if (++guard > 1000 * lines_per_direction)
                throw GenericityError("lightlike_family: anchor sampling stalled");
            Point anchor = random_point(rng, 3, 1000);
            Flat f = flat_from_anchor_and_directions(anchor, {to_rational_vec(dir)});
            if (dedupe.insert(f).second) {
                out.push_back(line_from_flat(f));
                ++made;
            }
        }
    }
    return out;
}

// For each point of a g x g x g integer grid, r distinct lines through the
// point inside its Legendrian plane; all outputs satisfy is_legendrian.
inline std::vector<Line3> legendrian_family(std::int64_t grid_side, std::int64_t lines_per_point,
                                            std::uint64_t seed) {
    if (grid_side < 1 || lines_per_point < 1)
        throw std::invalid_argument("legendrian_family: counts must be >= 1");
    // primitive coefficient pairs, enumerated by increasing height
    std::vector<std::pair<std::int64_t, std::int64_t>> coeffs;
    for (std::int64_t h = 1; static_cast<std::int64_t>(coeffs.size()) < 4 * lines_per_point + 8; ++h)
        for (std::int64_t alpha = 0; alpha <= h; ++alpha) {
            std::int64_t beta = h - alpha;
            if (std::gcd(alpha, beta) != 1)
                continue;
            coeffs.emplace_back(alpha, beta);
            if (alpha != 0 && beta != 0)
                coeffs.emplace_back(alpha, -beta);
        }
    Rng rng(seed);
    std::set<Flat> dedupe;
    std::vector<Line3> out;
    for (std::int64_t x = 1; x <= grid_side; ++x)
        for (std::int64_t y = 1; y <= grid_side; ++y)
            for (std::int64_t z = 1; z <= grid_side; ++z) {
                Point p = detail::int_point({x, y, z});
                const Rational& a = p.coords[0];
                const Rational& b = p.coords[1];
                RVec d1 = {Rational(1), Rational(0), -b};
                RVec d2 = {Rational(0), Rational(1), a};
                std::vector<std::size_t> order(coeffs.size());
                for (std::size_t i = 0; i < order.size(); ++i)
                    order[i] = i;
                std::shuffle(order.begin(), order.end(), rng);
                std::int64_t made = 0;
                for (std::size_t idx : order) {
                    if (made == lines_per_point)
                        break;
                    auto [alpha, beta] = coeffs[idx];
                    RVec dir(3);
                    for (int j = 0; j < 3; ++j)
                        dir[j] = Rational(alpha) * d1[j] + Rational(beta) * d2[j];
                    Flat f = flat_from_anchor_and_directions(p, {dir});
                    Line3 line = line_from_flat(f);
                    if (!is_legendrian(line))
                        throw GenericityError("legendrian_family: generated a non-Legendrian line");
                    if (dedupe.insert(f).second)
                        out.push_back(line);
                    ++made;
                }
            }
    return out;
}

// Dispatch by construction name; parameter names follow the generators.
inline GeneratedInstance generate(const ConstructionSpec& spec) {
    auto param = [&](const std::string& name) {
        auto it = spec.params.find(name);
        if (it == spec.params.end())
            throw std::invalid_argument("missing parameter: " + name);
        return it->second;
    };
    if (spec.kind == "elekes")
        return elekes_grid_2d(param("k"), param("l"));
    if (spec.kind == "grid")
        return grid_construction_3d(param("k"), param("l"));
    if (spec.kind == "parallel-bundle")
        return parallel_bundle_3d(param("N"), param("b"));
    if (spec.kind == "elekes-lift") {
        GeneratedInstance planar = elekes_grid_2d(param("k"), param("l"));
        return lift_to_flats(planar, static_cast<int>(param("d")), static_cast<int>(param("i")),
                             spec.seed);
    }
    if (spec.kind == "disjoint-bundles") {
        GeneratedInstance base = parallel_bundle_3d(param("N"), param("b"));
        return disjoint_copies(base, param("copies"));
    }
    if (spec.kind == "lightlike") {
        auto lines = lightlike_family(param("directions"), param("lines_per_direction"), spec.seed);
        GeneratedInstance out;
        out.family.ambient_dim = 3;
        Level lv{1, {}};
        for (const Line3& line : lines)
            lv.flats.push_back(line_to_flat(line));
        out.family.levels = {std::move(lv)};
        out.family.validate();
        out.predicted["lines"] = BigInt(lines.size());
        return out;
    }
    if (spec.kind == "legendrian") {
        auto lines = legendrian_family(param("g"), param("r"), spec.seed);
        GeneratedInstance out;
        out.family.ambient_dim = 3;
        Level lv{1, {}};
        for (const Line3& line : lines)
            lv.flats.push_back(line_to_flat(line));
        out.family.levels = {std::move(lv)};
        out.family.validate();
        out.predicted["lines"] = BigInt(lines.size());
        return out;
    }
    throw std::invalid_argument("unknown construction kind: " + spec.kind);
}

} // namespace flagforge
