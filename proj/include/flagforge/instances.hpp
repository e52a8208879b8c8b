#pragma once

#include "flagforge/family.hpp"
#include "flagforge/flat.hpp"
#include "flagforge/random.hpp"

#include <set>
#include <vector>

namespace flagforge {

// Random layered family with containment structure built from nested joins:
// level 0 is a small-coordinate point cloud, each higher level joins a flat
// of the previous level with extra cloud points, so real chains exist and
// coincidences are common. Used by the verification suites.
inline LayeredFamily random_layered_family(Rng& rng, int d, int max_per_level,
                                           std::vector<int> dims = {}) {
    if (dims.empty())
        for (int i = 0; i < d; ++i)
            dims.push_back(i);
    LayeredFamily fam;
    fam.ambient_dim = d;
    std::vector<Point> cloud;
    for (int i = 0; i < 4 * d + 8; ++i)
        cloud.push_back(random_point(rng, d, 3));
    auto rand_cloud_point = [&] {
        return cloud[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(cloud.size()) - 1))];
    };

    std::vector<Flat> prev;
    for (int li = 0; li < static_cast<int>(dims.size()); ++li) {
        const int dim = dims[li];
        const int want = static_cast<int>(uniform_int(rng, 1, max_per_level));
        std::set<Flat> level;
        int guard = 0;
        while (static_cast<int>(level.size()) < want && ++guard < 50 * want + 200) {
            std::vector<Point> pts;
            if (!prev.empty()) {
                const Flat& base =
                    prev[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(prev.size()) - 1))];
                pts = base.spanning_points();
            }
            while (static_cast<int>(pts.size()) < dim + 1)
                pts.push_back(rand_cloud_point());
            Flat f = flat_from_points(pts, d);
            if (f.dim() == dim)
                level.insert(f);
        }
        if (level.empty())
            level.insert(random_flat(rng, d, dim, 3));
        Level lv;
        lv.dim = dim;
        lv.flats.assign(level.begin(), level.end());
        prev = lv.flats;
        fam.levels.push_back(std::move(lv));
    }
    fam.validate();
    return fam;
}

} // namespace flagforge
