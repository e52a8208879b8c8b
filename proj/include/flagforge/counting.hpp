#pragma once

#include "flagforge/family.hpp"
#include "flagforge/fingerprint.hpp"
#include "flagforge/flat.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace flagforge {

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Containment edges (lower index, upper index) for one consecutive level pair.
struct LevelPairEdges {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct ContainmentGraph {
    std::vector<LevelPairEdges> pairs; // one entry per consecutive level pair
};

namespace detail {

// All-pairs scan of one level pair. The fingerprint filter rejects almost
// every non-containment with one dot product mod p; the few candidates are
// confirmed exactly, so the edge set is exact. Blocked over the lower side
// to keep fingerprints cache-resident at large sizes.
inline LevelPairEdges scan_level_pair(const std::vector<Flat>& lower, const std::vector<Flat>& upper) {
    LevelPairEdges out;
    if (lower.empty() || upper.empty())
        return out;
    ContainmentFilter filter(lower, upper);
    const std::size_t block = 1 << 15;
    for (std::size_t f0 = 0; f0 < lower.size(); f0 += block) {
        const std::size_t f1 = std::min(lower.size(), f0 + block);
        for (std::size_t g = 0; g < upper.size(); ++g) {
            for (std::size_t f = f0; f < f1; ++f) {
                if (!filter.maybe_contains(g, f))
                    continue;
                if (contains(upper[g], lower[f]))
                    out.edges.emplace_back(static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(g));
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

} // namespace detail

inline ContainmentGraph containment_graph(const LayeredFamily& family) {
    ContainmentGraph g;
    for (std::size_t i = 0; i + 1 < family.levels.size(); ++i)
        g.pairs.push_back(detail::scan_level_pair(family.levels[i].flats, family.levels[i + 1].flats));
    return g;
}

namespace detail {

// Per-flat running counts, bottom level upward. up[i][f] is the number of
// partial flags over levels 0..i ending at flat f.
inline std::vector<std::vector<BigInt>> upward_counts(const LayeredFamily& family, const ContainmentGraph& graph) {
    std::vector<std::vector<BigInt>> up(family.levels.size());
    if (family.levels.empty())
        return up;
    up[0].assign(family.levels[0].flats.size(), BigInt(1));
    for (std::size_t i = 0; i + 1 < family.levels.size(); ++i) {
        up[i + 1].assign(family.levels[i + 1].flats.size(), BigInt(0));
        for (const auto& [f, g] : graph.pairs[i].edges)
            up[i + 1][g] += up[i][f];
    }
    return up;
}

// Mirror image: down[i][f] counts partial flags over levels i..top starting at f.
inline std::vector<std::vector<BigInt>> downward_counts(const LayeredFamily& family, const ContainmentGraph& graph) {
    std::vector<std::vector<BigInt>> down(family.levels.size());
    if (family.levels.empty())
        return down;
    const std::size_t top = family.levels.size() - 1;
    down[top].assign(family.levels[top].flats.size(), BigInt(1));
    for (std::size_t i = top; i-- > 0;) {
        down[i].assign(family.levels[i].flats.size(), BigInt(0));
        for (const auto& [f, g] : graph.pairs[i].edges)
            down[i][f] += down[i + 1][g];
    }
    return down;
}

} // namespace detail

// Exact number of tuples with one flat per level and each flat contained in
// the next, by layered path counting over the containment graph.
inline BigInt count_flags_dp(const LayeredFamily& family, const ContainmentGraph& graph) {
    if (family.levels.empty())
        return 0;
    auto up = detail::upward_counts(family, graph);
    BigInt total = 0;
    for (const BigInt& c : up.back())
        total += c;
    return total;
}

inline BigInt count_flags_dp(const LayeredFamily& family) {
    return count_flags_dp(family, containment_graph(family));
}

// Partial flags use the same path count: containment between consecutive
// levels of the dimension subsequence is exactly what the chain requires
// (transitivity supplies the rest).
inline BigInt count_partial_flags(const LayeredFamily& family) { return count_flags_dp(family); }

// Independent oracle: walks the Cartesian product level by level, testing
// every consecutive containment with exact arithmetic only. Prefix pruning
// skips tuples already known to fail and does not change the count.
inline BigInt count_flags_bruteforce(const LayeredFamily& family, std::uint64_t cap = 100'000'000ull) {
    if (family.levels.empty())
        return 0;
    unsigned __int128 product = 1;
    for (const Level& lv : family.levels) {
        product *= lv.flats.size();
        if (product > cap)
            throw CapExceededError("count_flags_bruteforce: product of level sizes exceeds cap");
    }
    const std::size_t depth = family.levels.size();
    BigInt total = 0;
    std::vector<std::size_t> choice(depth, 0);
    // depth-first over levels; level 0 choices are unconstrained
    std::size_t lv = 0;
    if (family.levels[0].flats.empty())
        return 0;
    for (;;) {
        if (lv + 1 == depth) {
            total += 1;
        } else {
            const Flat& f = family.levels[lv].flats[choice[lv]];
            const auto& next = family.levels[lv + 1].flats;
            bool descended = false;
            for (std::size_t j = 0; j < next.size(); ++j) {
                if (contains(next[j], f)) {
                    choice[++lv] = j;
                    descended = true;
                    break;
                }
            }
            if (descended)
                continue;
        }
        // advance: try the next sibling at this level, backtracking as needed
        for (;;) {
            const Flat* parent = lv > 0 ? &family.levels[lv - 1].flats[choice[lv - 1]] : nullptr;
            const auto& here = family.levels[lv].flats;
            std::size_t j = choice[lv] + 1;
            while (j < here.size() && parent != nullptr && !contains(here[j], *parent))
                ++j;
            if (j < here.size()) {
                choice[lv] = j;
                break;
            }
            if (lv == 0)
                return total;
            --lv;
        }
    }
}

// Partition of level i by the paper's prefix/suffix degree rule: prefix
// count <= 1 lands in s1, else suffix count <= 1 in s2, the rest in s0.
struct DegreeSplit {
    std::vector<Flat> s0, s1, s2;
    std::vector<std::size_t> s0_idx, s1_idx, s2_idx;
};

inline DegreeSplit degree_split(const LayeredFamily& family, std::size_t i, const ContainmentGraph& graph) {
    if (i == 0 || i + 1 >= family.levels.size())
        throw std::invalid_argument("degree_split: index must name an interior level");
    auto up = detail::upward_counts(family, graph);
    auto down = detail::downward_counts(family, graph);
    DegreeSplit split;
    for (std::size_t f = 0; f < family.levels[i].flats.size(); ++f) {
        const Flat& flat = family.levels[i].flats[f];
        if (up[i][f] <= 1) {
            split.s1.push_back(flat);
            split.s1_idx.push_back(f);
        } else if (down[i][f] <= 1) {
            split.s2.push_back(flat);
            split.s2_idx.push_back(f);
        } else {
            split.s0.push_back(flat);
            split.s0_idx.push_back(f);
        }
    }
    return split;
}

inline DegreeSplit degree_split(const LayeredFamily& family, std::size_t i) {
    return degree_split(family, i, containment_graph(family));
}

// Copy of the family with level i replaced by the given flats.
inline LayeredFamily replace_level(const LayeredFamily& family, std::size_t i, std::vector<Flat> flats) {
    LayeredFamily out = family;
    out.levels[i].flats = std::move(flats);
    return out;
}

// Histogram N_{k,l}: number of lines with exactly k incident points and l
// containing planes. Every line contributes a cell, including zero degrees.
struct DegreeProfile {
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> cells;

    std::uint64_t total_lines() const {
        std::uint64_t n = 0;
        for (const auto& [kl, v] : cells)
            n += v;
        return n;
    }

    // Σ k·l·N_{k,l}; equals the exact flag count I(P,L,S).
    BigInt flag_count() const {
        BigInt total = 0;
        for (const auto& [kl, v] : cells)
            total += BigInt(kl.first) * kl.second * v;
        return total;
    }

    std::uint64_t max_point_degree() const {
        std::uint64_t m = 0;
        for (const auto& [kl, v] : cells)
            m = std::max(m, kl.first);
        return m;
    }

    std::uint64_t max_plane_degree() const {
        std::uint64_t m = 0;
        for (const auto& [kl, v] : cells)
            m = std::max(m, kl.second);
        return m;
    }
};

inline DegreeProfile degree_profile(const std::vector<Flat>& points, const std::vector<Flat>& lines,
                                    const std::vector<Flat>& planes) {
    auto pl = detail::scan_level_pair(points, lines);
    auto ls = detail::scan_level_pair(lines, planes);
    std::vector<std::uint64_t> k(lines.size(), 0), l(lines.size(), 0);
    for (const auto& [p, line] : pl.edges)
        ++k[line];
    for (const auto& [line, s] : ls.edges)
        ++l[line];
    DegreeProfile profile;
    for (std::size_t i = 0; i < lines.size(); ++i)
        ++profile.cells[{k[i], l[i]}];
    return profile;
}

// Largest number of coplanar input lines through a single input point:
// max over p in P and planes π through p of |{ℓ in L : p ∈ ℓ ⊆ π}|.
inline std::uint64_t max_coplanar_through_point(const std::vector<Point>& points, const std::vector<Flat>& lines) {
    std::uint64_t best = 0;
    for (const Point& p : points) {
        std::vector<std::size_t> through;
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (contains_point(lines[i], p))
                through.push_back(i);
        if (through.empty())
            continue;
        std::uint64_t local = 1;
        // group concurrent lines by the plane each pair spans
        std::map<Flat, std::vector<std::size_t>> plane_groups;
        for (std::size_t a = 0; a < through.size(); ++a)
            for (std::size_t b = a + 1; b < through.size(); ++b) {
                Flat plane = join(lines[through[a]], lines[through[b]]);
                auto& grp = plane_groups[plane];
                grp.push_back(through[a]);
                grp.push_back(through[b]);
            }
        for (auto& [plane, members] : plane_groups) {
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            local = std::max<std::uint64_t>(local, members.size());
        }
        best = std::max(best, local);
    }
    return best;
}

} // namespace flagforge
