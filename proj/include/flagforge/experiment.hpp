#pragma once

#include "flagforge/bounds.hpp"
#include "flagforge/constructions.hpp"
#include "flagforge/counting.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagforge {

// One schedule point of a scaling sweep: the construction, its exact counts,
// the relevant bound values, and the measured constant
// count / (dominant term of the primary bound).
struct ExperimentRow {
    std::string kind;
    std::map<std::string, std::int64_t> params;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> level_sizes;
    BigInt count;
    std::map<std::string, BoundValue> bounds;
    std::string primary_bound;
    double measured_constant = 0.0;
    double wall_seconds = 0.0;
    bool skipped = false;
};

struct ExperimentOptions {
    std::uint64_t seed = 0;
    // pairwise scan work (sum over level pairs of |S_i|*|S_{i+1}|) above
    // which a schedule point is skipped rather than run
    std::uint64_t work_cap = 100'000'000'000ull;
};

namespace detail {

inline double bigint_to_double(const BigInt& v) { return v.convert_to<double>(); }

// Largest per-line degree (points on it or planes through it) read off the
// already-computed containment graph of a (P, L, S) family.
inline std::uint64_t max_line_degree(const LayeredFamily& family, const ContainmentGraph& graph) {
    std::vector<std::uint64_t> deg_pts(family.levels[1].flats.size(), 0);
    std::vector<std::uint64_t> deg_pls(family.levels[1].flats.size(), 0);
    for (const auto& [p, l] : graph.pairs[0].edges)
        ++deg_pts[l];
    for (const auto& [l, s] : graph.pairs[1].edges)
        ++deg_pls[l];
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < deg_pts.size(); ++i)
        b = std::max({b, deg_pts[i], deg_pls[i]});
    return b;
}

} // namespace detail

// Runs one construction and fills a row: exact count via the DP, bounds
// chosen by family shape (Szemeredi-Trotter for two levels, the flag bound
// and the restricted 3D bound for point/line/plane families).
inline ExperimentRow run_schedule_point(const std::string& kind,
                                        const std::map<std::string, std::int64_t>& params,
                                        std::uint64_t seed, std::uint64_t work_cap) {
    ExperimentRow row;
    row.kind = kind;
    row.params = params;
    row.seed = seed;
    const auto start = std::chrono::steady_clock::now();

    GeneratedInstance inst = generate(ConstructionSpec{kind, params, seed});
    std::uint64_t work = 0;
    for (std::size_t i = 0; i + 1 < inst.family.levels.size(); ++i)
        work += static_cast<std::uint64_t>(inst.family.levels[i].flats.size()) *
                inst.family.levels[i + 1].flats.size();
    for (const Level& lv : inst.family.levels)
        row.level_sizes.push_back(lv.flats.size());
    if (work > work_cap) {
        row.skipped = true;
        return row;
    }

    ContainmentGraph graph = containment_graph(inst.family);
    row.count = count_flags_dp(inst.family, graph);

    const auto& levels = inst.family.levels;
    if (levels.size() == 2) {
        double m = static_cast<double>(levels[0].flats.size());
        double n = static_cast<double>(levels[1].flats.size());
        if (m >= 1 && n >= 1) {
            row.bounds["st"] = st_bound(m, n);
            row.primary_bound = "st";
        }
    } else if (levels.size() == 3 && levels[0].dim == 0 && levels[1].dim == 1 && levels[2].dim == 2) {
        double p = static_cast<double>(levels[0].flats.size());
        double l = static_cast<double>(levels[1].flats.size());
        double s = static_cast<double>(levels[2].flats.size());
        if (p >= 1 && l >= 1 && s >= 1) {
            row.bounds["flags"] = flags_bound({p, l, s});
            std::uint64_t b = detail::max_line_degree(inst.family, graph);
            row.bounds["flags3d-restricted"] =
                flags3d_restricted_bound(p, l, s, static_cast<double>(std::max<std::uint64_t>(b, 1)));
            row.primary_bound = "flags3d-restricted";
        }
    }
    if (!row.primary_bound.empty()) {
        double dom = row.bounds.at(row.primary_bound).dominant_value;
        if (dom > 0)
            row.measured_constant = detail::bigint_to_double(row.count) / dom;
    }
    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

inline std::vector<ExperimentRow> run_experiment(const std::string& kind,
                                                 const std::vector<std::map<std::string, std::int64_t>>& schedule,
                                                 const ExperimentOptions& options = {}) {
    if (schedule.empty())
        throw std::invalid_argument("run_experiment: empty schedule");
    std::vector<ExperimentRow> rows;
    for (std::size_t i = 0; i < schedule.size(); ++i)
        rows.push_back(run_schedule_point(kind, schedule[i],
                                          detail::derive_seed(options.seed, i), options.work_cap));
    return rows;
}

// Least-squares slope of log y against log x.
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
    int points_used = 0;
};

inline FitResult fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("fit_exponent: size mismatch");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] > 0 && ys[i] > 0) {
            lx.push_back(std::log(xs[i]));
            ly.push_back(std::log(ys[i]));
        }
    const int n = static_cast<int>(lx.size());
    if (n < 2)
        throw std::invalid_argument("fit_exponent: need at least 2 usable points");
    double sx = 0, sy = 0;
    for (int i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0)
        throw std::invalid_argument("fit_exponent: degenerate x values");
    FitResult fit;
    fit.points_used = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy > 0) {
        double ss_res = 0;
        for (int i = 0; i < n; ++i) {
            double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
            ss_res += r * r;
        }
        fit.r_squared = std::max(0.0, 1.0 - ss_res / syy);
    }
    return fit;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

// Fixed-column CSV: header row, UTF-8, LF endings; big-integer counts as
// decimal strings. Wall times vary run to run, so they are opt-in to keep the
// default output byte-identical for a given command and seed.
inline void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows,
                                 bool include_timings = false) {
    std::set<std::string> param_names, bound_ids;
    for (const ExperimentRow& row : rows) {
        for (const auto& [k, v] : row.params)
            param_names.insert(k);
        for (const auto& [k, v] : row.bounds)
            bound_ids.insert(k);
    }
    out << "kind,seed";
    for (const auto& p : param_names)
        out << ",param_" << p;
    out << ",level_sizes,count";
    for (const auto& b : bound_ids)
        out << ",bound_" << b;
    out << ",primary_bound,dominant_term,measured_constant,skipped";
    if (include_timings)
        out << ",wall_seconds";
    out << "\n";
    for (const ExperimentRow& row : rows) {
        out << row.kind << "," << row.seed;
        for (const auto& p : param_names) {
            auto it = row.params.find(p);
            out << ",";
            if (it != row.params.end())
                out << it->second;
        }
        out << ",";
        for (std::size_t i = 0; i < row.level_sizes.size(); ++i)
            out << (i ? ";" : "") << row.level_sizes[i];
        out << "," << row.count.str();
        for (const auto& b : bound_ids) {
            auto it = row.bounds.find(b);
            out << ",";
            if (it != row.bounds.end())
                out << detail::format_double(it->second.value);
        }
        const ExperimentRow& r = row;
        out << "," << r.primary_bound << ",";
        if (!r.primary_bound.empty())
            out << "\"" << r.bounds.at(r.primary_bound).dominant_term << "\"";
        out << "," << detail::format_double(r.measured_constant) << "," << (r.skipped ? 1 : 0);
        if (include_timings)
            out << "," << detail::format_double(r.wall_seconds);
        out << "\n";
    }
}

// CSV rows (k, l, count) for a degree profile.
inline void write_profile_csv(std::ostream& out, const DegreeProfile& profile) {
    out << "k,l,count\n";
    for (const auto& [kl, v] : profile.cells)
        out << kl.first << "," << kl.second << "," << v << "\n";
}

// CSV row for a bound evaluation: (bound_id, inputs..., value, dominant_term).
inline void write_bound_csv(std::ostream& out, const std::string& bound_id,
                            const std::vector<std::pair<std::string, double>>& inputs,
                            const BoundValue& value) {
    out << "bound_id";
    for (const auto& [name, v] : inputs)
        out << "," << name;
    out << ",value,dominant_term\n" << bound_id;
    for (const auto& [name, v] : inputs)
        out << "," << detail::format_double(v);
    out << "," << detail::format_double(value.value) << ",\"" << value.dominant_term << "\"\n";
}

} // namespace flagforge
