#include "flagforge/bounds.hpp"
#include "flagforge/constructions.hpp"
#include "flagforge/counting.hpp"
#include "flagforge/experiment.hpp"
#include "flagforge/io.hpp"
#include "flagforge/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace flagforge;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("FLAGFORGE_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

// "k=4" or "k=4;l=2" -> map
std::map<std::string, std::int64_t> parse_params(const std::vector<std::string>& entries) {
    std::map<std::string, std::int64_t> params;
    for (const std::string& entry : entries) {
        std::stringstream ss(entry);
        std::string item;
        while (std::getline(ss, item, ';')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw CLI::ValidationError("--param", "expected name=value, got '" + item + "'");
            params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
        }
    }
    return params;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stod(item));
    return out;
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

std::string predicted_path(const std::string& family_path) {
    auto dot = family_path.rfind('.');
    std::string stem = dot == std::string::npos ? family_path : family_path.substr(0, dot);
    return stem + ".predicted.json";
}

int cmd_generate(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed,
                 const std::string& out_path) {
    ConstructionSpec spec{kind, parse_params(params), seed};
    GeneratedInstance inst = generate(spec);
    save_family(out_path, inst.family);
    Json sidecar{{"kind", spec.kind}, {"seed", spec.seed}, {"predicted", predicted_to_json(inst.predicted)}};
    Json jparams = Json::object();
    for (const auto& [k, v] : spec.params)
        jparams[k] = v;
    sidecar["parameters"] = jparams;
    write_json_file(predicted_path(out_path), sidecar);
    std::vector<std::string> sizes;
    for (const Level& lv : inst.family.levels)
        std::cout << "level dim " << lv.dim << ": " << lv.flats.size() << " flats\n";
    std::cout << "wrote " << out_path << " and " << predicted_path(out_path) << "\n";
    return 0;
}

int cmd_count(const std::string& in_path, bool brute, const std::string& profile_path) {
    LayeredFamily fam = load_family(in_path);
    BigInt count = brute ? count_flags_bruteforce(fam) : count_flags_dp(fam);
    std::cout << count.str() << "\n";
    if (!profile_path.empty()) {
        if (fam.levels.size() != 3 || fam.levels[0].dim != 0 || fam.levels[1].dim != 1 ||
            fam.levels[2].dim != 2)
            throw std::invalid_argument("--profile needs a (points, lines, planes) family");
        auto profile = degree_profile(fam.levels[0].flats, fam.levels[1].flats, fam.levels[2].flats);
        std::ofstream out(profile_path);
        write_profile_csv(out, profile);
    }
    return 0;
}

int cmd_bound(const std::string& id, const std::string& sizes_csv, double b_param,
              const std::string& dims_csv) {
    std::vector<double> sizes = parse_doubles(sizes_csv);
    std::vector<std::pair<std::string, double>> inputs;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        inputs.emplace_back("size_" + std::to_string(i), sizes[i]);
    BoundValue value;
    if (id == "st") {
        if (sizes.size() != 2)
            throw std::invalid_argument("st expects 2 sizes");
        value = st_bound(sizes[0], sizes[1]);
    } else if (id == "gk") {
        if (sizes.size() != 2)
            throw std::invalid_argument("gk expects 2 sizes plus --B");
        inputs.emplace_back("B", b_param);
        value = gk_bound(sizes[0], sizes[1], b_param);
    } else if (id == "pl34") {
        if (sizes.size() != 2)
            throw std::invalid_argument("pl34 expects 2 sizes");
        value = pl34_bound(sizes[0], sizes[1]);
    } else if (id == "flags") {
        value = flags_bound(sizes);
    } else if (id == "flags3d-restricted") {
        if (sizes.size() != 3)
            throw std::invalid_argument("flags3d-restricted expects 3 sizes plus --b");
        inputs.emplace_back("b", b_param);
        value = flags3d_restricted_bound(sizes[0], sizes[1], sizes[2], b_param);
    } else if (id == "partial-flags") {
        value = partial_flags_bound(parse_ints(dims_csv), sizes);
    } else {
        throw std::invalid_argument("unknown bound id: " + id);
    }
    write_bound_csv(std::cout, id, inputs, value);
    return 0;
}

int cmd_experiment(const std::string& kind, const std::vector<std::string>& points, std::uint64_t seed,
                   const std::string& out_path, bool timings, std::uint64_t cap,
                   const std::string& fit_x) {
    std::vector<std::map<std::string, std::int64_t>> schedule;
    for (const std::string& point : points)
        schedule.push_back(parse_params({point}));
    ExperimentOptions options;
    options.seed = seed;
    options.work_cap = cap;
    auto rows = run_experiment(kind, schedule, options);
    if (out_path.empty()) {
        write_experiment_csv(std::cout, rows, timings);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        write_experiment_csv(out, rows, timings);
    }
    if (!fit_x.empty()) {
        std::vector<double> xs, ys;
        for (const ExperimentRow& row : rows) {
            if (row.skipped)
                continue;
            double x = 0;
            if (fit_x.rfind("param:", 0) == 0) {
                x = static_cast<double>(row.params.at(fit_x.substr(6)));
            } else if (fit_x.rfind("size:", 0) == 0) {
                x = static_cast<double>(row.level_sizes.at(std::stoul(fit_x.substr(5))));
            } else {
                throw std::invalid_argument("--fit-x expects param:<name> or size:<index>");
            }
            xs.push_back(x);
            ys.push_back(row.count.convert_to<double>());
        }
        FitResult fit = fit_exponent(xs, ys);
        std::ostream& os = out_path.empty() ? std::cerr : std::cout;
        os << "fit: slope=" << fit.slope << " intercept=" << fit.intercept
           << " r_squared=" << fit.r_squared << " points=" << fit.points_used << "\n";
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed, int instances) {
    std::set<std::string> scopes(suites.begin(), suites.end());
    auto results = verify_suite(scopes, seed, instances);
    bool all_ok = true;
    for (const SuiteResult& r : results) {
        std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.name << " (" << r.checks - r.failures
                  << "/" << r.checks << " checks)\n";
        for (const std::string& note : r.notes)
            std::cout << "  - " << note << "\n";
        all_ok = all_ok && r.passed();
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flagforge: exact flag counting over rational flat families"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();

    auto* gen = app.add_subcommand("generate", "generate a construction and write it as JSON");
    std::string gen_kind, gen_out = "family.json";
    std::vector<std::string> gen_params;
    gen->add_option("--kind", gen_kind,
                    "construction: elekes | grid | parallel-bundle | elekes-lift | disjoint-bundles | "
                    "lightlike | legendrian")
        ->required();
    gen->add_option("--param", gen_params, "parameter assignment, e.g. --param k=4 --param l=2");
    gen->add_option("--seed", seed, "random seed (default: env FLAGFORGE_SEED or 0)");
    gen->add_option("--out", gen_out, "output family JSON; predicted sidecar goes next to it");

    auto* cnt = app.add_subcommand("count", "exact flag count of a family JSON (complete or partial)");
    std::string cnt_in, cnt_profile;
    bool cnt_brute = false;
    cnt->add_option("--in", cnt_in, "family JSON path")->required();
    cnt->add_flag("--brute", cnt_brute, "use the exhaustive oracle instead of the DP");
    cnt->add_option("--profile", cnt_profile, "also write the (k,l,count) degree profile CSV here");

    auto* bnd = app.add_subcommand("bound", "evaluate a bound formula, emit one CSV row");
    std::string bnd_id, bnd_sizes, bnd_dims;
    double bnd_b = 1.0;
    bnd->add_option("--id", bnd_id, "st | gk | flags | pl34 | flags3d-restricted | partial-flags")
        ->required();
    bnd->add_option("--sizes", bnd_sizes, "comma-separated level sizes")->required();
    bnd->add_option("--B", bnd_b, "plane-degree parameter for gk");
    bnd->add_option("--b", bnd_b, "line-degree parameter for flags3d-restricted");
    bnd->add_option("--dims", bnd_dims, "comma-separated dims for partial-flags");

    auto* exp = app.add_subcommand("experiment", "run a parameter sweep, emit CSV rows");
    std::string exp_kind, exp_out, exp_fit;
    std::vector<std::string> exp_points;
    bool exp_timings = false;
    std::uint64_t exp_cap = ExperimentOptions{}.work_cap;
    exp->add_option("--kind", exp_kind, "construction kind")->required();
    exp->add_option("--point", exp_points, "schedule point, e.g. --point 'N=12;b=3' (repeatable)")
        ->required();
    exp->add_option("--seed", seed, "random seed (default: env FLAGFORGE_SEED or 0)");
    exp->add_option("--out", exp_out, "CSV output path (default: stdout)");
    exp->add_flag("--timings", exp_timings, "include wall_seconds (breaks byte-reproducibility)");
    exp->add_option("--cap", exp_cap, "pairwise-scan work cap; larger points are skipped");
    exp->add_option("--fit-x", exp_fit, "log-log fit of count against param:<name> or size:<index>");

    auto* ver = app.add_subcommand("verify", "run the invariant suites; nonzero exit on failure");
    std::vector<std::string> ver_suites;
    int ver_instances = 50;
    ver->add_option("--suite", ver_suites,
                    "oracle | eqsum | duality | legendrian | section | predicted (default: all)");
    ver->add_option("--seed", seed, "random seed (default: env FLAGFORGE_SEED or 0)");
    ver->add_option("--instances", ver_instances, "instances per randomized suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(gen_kind, gen_params, seed, gen_out);
        if (cnt->parsed())
            return cmd_count(cnt_in, cnt_brute, cnt_profile);
        if (bnd->parsed())
            return cmd_bound(bnd_id, bnd_sizes, bnd_b, bnd_dims);
        if (exp->parsed())
            return cmd_experiment(exp_kind, exp_points, seed, exp_out, exp_timings, exp_cap, exp_fit);
        if (ver->parsed())
            return cmd_verify(ver_suites, seed, ver_instances);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
