#pragma once

#include "flagforge/flat.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace flagforge {

struct Level {
    int dim = 0;
    std::vector<Flat> flats;
};

// Ordered levels of strictly increasing dimension; the input to flag
// counting. Flats within a level are pairwise distinct canonical forms.
struct LayeredFamily {
    int ambient_dim = 0;
    std::vector<Level> levels;

    std::size_t level_count() const { return levels.size(); }

    void validate() const {
        int prev_dim = -1;
        for (const Level& lv : levels) {
            if (lv.dim <= prev_dim)
                throw std::invalid_argument("level dimensions must strictly increase");
            if (lv.dim > ambient_dim)
                throw std::invalid_argument("level dimension exceeds ambient dimension");
            prev_dim = lv.dim;
            for (const Flat& f : lv.flats) {
                if (f.ambient_dim() != ambient_dim)
                    throw std::invalid_argument("flat ambient dimension mismatch");
                if (f.dim() != lv.dim)
                    throw std::invalid_argument("flat dimension does not match its level");
            }
            std::vector<const Flat*> sorted;
            sorted.reserve(lv.flats.size());
            for (const Flat& f : lv.flats)
                sorted.push_back(&f);
            std::sort(sorted.begin(), sorted.end(), [](const Flat* a, const Flat* b) { return *a < *b; });
            for (std::size_t i = 1; i < sorted.size(); ++i)
                if (*sorted[i - 1] == *sorted[i])
                    throw std::invalid_argument("duplicate flat within a level");
        }
    }
};

inline LayeredFamily make_family(int ambient_dim, std::vector<Level> levels) {
    LayeredFamily fam{ambient_dim, std::move(levels)};
    fam.validate();
    return fam;
}

// Deduplicates a flat list into deterministic sorted order.
inline std::vector<Flat> dedupe_flats(std::vector<Flat> flats) {
    std::sort(flats.begin(), flats.end());
    flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
    return flats;
}

} // namespace flagforge
