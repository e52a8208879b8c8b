#pragma once

#include "flagforge/family.hpp"
#include "flagforge/flat.hpp"
#include "flagforge/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace flagforge {

using Json = nlohmann::json;

// Rationals travel as exact "p" / "p/q" decimal strings.
inline Json flat_to_json(const Flat& f) {
    Json basis = Json::array();
    for (const RVec& row : f.basis()) {
        Json jrow = Json::array();
        for (const Rational& q : row)
            jrow.push_back(rational_to_string(q));
        basis.push_back(std::move(jrow));
    }
    return Json{{"ambient_dim", f.ambient_dim()}, {"dim", f.dim()}, {"basis", std::move(basis)}};
}

inline Flat flat_from_json(const Json& j) {
    const int ambient = j.at("ambient_dim").get<int>();
    RMat rows;
    for (const Json& jrow : j.at("basis")) {
        RVec row;
        for (const Json& cell : jrow)
            row.push_back(rational_from_string(cell.get<std::string>()));
        if (static_cast<int>(row.size()) != ambient + 1)
            throw std::invalid_argument("flat_from_json: basis row has wrong width");
        rows.push_back(std::move(row));
    }
    Flat f = flat_from_homogeneous_rows(std::move(rows), ambient);
    if (j.contains("dim") && f.dim() != j.at("dim").get<int>())
        throw std::invalid_argument("flat_from_json: declared dim does not match basis rank");
    return f;
}

inline Json family_to_json(const LayeredFamily& family) {
    Json levels = Json::array();
    for (const Level& lv : family.levels) {
        Json flats = Json::array();
        for (const Flat& f : lv.flats)
            flats.push_back(flat_to_json(f));
        levels.push_back(Json{{"dim", lv.dim}, {"flats", std::move(flats)}});
    }
    return Json{{"ambient_dim", family.ambient_dim}, {"levels", std::move(levels)}};
}

inline LayeredFamily family_from_json(const Json& j) {
    LayeredFamily fam;
    fam.ambient_dim = j.at("ambient_dim").get<int>();
    for (const Json& jl : j.at("levels")) {
        Level lv;
        lv.dim = jl.at("dim").get<int>();
        for (const Json& jf : jl.at("flats"))
            lv.flats.push_back(flat_from_json(jf));
        fam.levels.push_back(std::move(lv));
    }
    fam.validate();
    return fam;
}

inline Json predicted_to_json(const std::map<std::string, BigInt>& predicted) {
    Json out = Json::object();
    for (const auto& [key, value] : predicted)
        out[key] = value.str();
    return out;
}

inline std::map<std::string, BigInt> predicted_from_json(const Json& j) {
    std::map<std::string, BigInt> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = BigInt(it.value().get<std::string>());
    return out;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);
    Json j;
    in >> j;
    return j;
}

inline void save_family(const std::string& path, const LayeredFamily& family) {
    write_json_file(path, family_to_json(family));
}

inline LayeredFamily load_family(const std::string& path) {
    return family_from_json(read_json_file(path));
}

} // namespace flagforge
