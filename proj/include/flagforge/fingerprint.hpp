#pragma once

#include "flagforge/flat.hpp"
#include "flagforge/rational.hpp"

#include <cassert>
#include <cstdint>
#include <vector>

namespace flagforge::detail {

// One-sided containment filter over Z_p, p = 2^61 - 1.
//
// For a level pair (lower, upper) we precompute one fingerprint vector per
// flat so that the pair test collapses to a single dot product mod p:
//
//   x_f = u · B_f            (random combination of f's basis rows)
//   y_g = w - Σ_j (row_j(g)·w) e_{piv_j}   (w reduced by g's RREF basis)
//
// If f ⊆ g then every basis row of f reduces to zero against g, so
// x_f · y_g = 0 exactly and hence mod p, for ANY u, w: a nonzero dot
// certifies non-containment. A zero dot is only a candidate and must be
// confirmed with exact arithmetic, so counting stays exact no matter how
// the randomness falls.

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t fold_mod_mersenne61(unsigned __int128 x) {
    unsigned __int128 r = (x & kMersenne61) + (x >> 61);
    r = (r & kMersenne61) + (r >> 61);
    auto v = static_cast<std::uint64_t>(r);
    if (v >= kMersenne61)
        v -= kMersenne61;
    return v;
}

inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
    return fold_mod_mersenne61(static_cast<unsigned __int128>(a) * b);
}

inline std::uint64_t addmod61(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b; // both < 2^61: no overflow
    if (r >= kMersenne61)
        r -= kMersenne61;
    return r;
}

inline std::uint64_t bigint_mod61(const BigInt& v) {
    BigInt r = v % kMersenne61;
    if (r < 0)
        r += kMersenne61;
    return r.convert_to<std::uint64_t>();
}

// Clears denominators of a rational row and reduces mod p. Row scaling does
// not affect the one-sidedness of the filter.
inline std::vector<std::uint64_t> row_mod61(const RVec& row) {
    BigInt scale = denominator_lcm(row);
    std::vector<std::uint64_t> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        out[i] = bigint_mod61(numerator(row[i] * scale));
    return out;
}

class ContainmentFilter {
public:
    ContainmentFilter(const std::vector<Flat>& lower, const std::vector<Flat>& upper,
                      std::uint64_t salt = 0x5EED5EED5EED5EEDull) {
        if (lower.empty() || upper.empty())
            return;
        width_ = static_cast<std::size_t>(lower[0].ambient_dim()) + 1;
        assert(width_ <= 64 && "raw 128-bit accumulation requires d+1 <= 64");
        std::uint64_t state = salt;
        auto draw = [&] { return splitmix64(state) % (kMersenne61 - 1) + 1; };

        const std::size_t low_rows = lower[0].basis().size();
        std::vector<std::uint64_t> u(low_rows);
        for (auto& c : u)
            c = draw();
        std::vector<std::uint64_t> w(width_);
        for (auto& c : w)
            c = draw();

        x_.assign(lower.size() * width_, 0);
        for (std::size_t i = 0; i < lower.size(); ++i) {
            std::uint64_t* x = &x_[i * width_];
            const RMat& b = lower[i].basis();
            for (std::size_t r = 0; r < b.size(); ++r) {
                auto row = row_mod61(b[r]);
                for (std::size_t c = 0; c < width_; ++c)
                    x[c] = addmod61(x[c], mulmod61(u[r], row[c]));
            }
        }

        RVec w_rat(width_);
        for (std::size_t c = 0; c < width_; ++c)
            w_rat[c] = Rational(w[c]);
        y_.assign(upper.size() * width_, 0);
        for (std::size_t i = 0; i < upper.size(); ++i) {
            const Flat& g = upper[i];
            RVec y = w_rat;
            for (std::size_t r = 0; r < g.basis().size(); ++r)
                y[g.pivots()[r]] = w_rat[g.pivots()[r]] - dot(g.basis()[r], w_rat);
            auto ym = row_mod61(y);
            std::copy(ym.begin(), ym.end(), y_.begin() + i * width_);
        }
    }

    std::size_t width() const { return width_; }

    // False means certified non-containment; true means "verify exactly".
    bool maybe_contains(std::size_t upper_idx, std::size_t lower_idx) const {
        const std::uint64_t* x = &x_[lower_idx * width_];
        const std::uint64_t* y = &y_[upper_idx * width_];
        unsigned __int128 acc = 0;
        for (std::size_t c = 0; c < width_; ++c)
            acc += static_cast<unsigned __int128>(x[c]) * y[c];
        return fold_mod_mersenne61(acc) == 0;
    }

    const std::uint64_t* lower_fingerprint(std::size_t i) const { return &x_[i * width_]; }
    const std::uint64_t* upper_fingerprint(std::size_t i) const { return &y_[i * width_]; }

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> y_;
};

} // namespace flagforge::detail
