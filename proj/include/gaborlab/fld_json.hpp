#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "gaborlab/grid.hpp"
#include "gaborlab/lattice_seq.hpp"

namespace gaborlab {

using nlohmann::json;

// FLD-JSON v1: {"format":"fld-json/1","d":..,"L":..,"N":..,
//               "kind":"field"|"phasefield","values":[[re,im],...]}
// values row-major; phase fields x-major with the space grid in the header.

inline json to_json(const Field& f) {
    json j;
    j["format"] = "fld-json/1";
    j["d"] = f.grid.d;
    j["L"] = f.grid.L;
    j["N"] = f.grid.N;
    j["kind"] = "field";
    json vals = json::array();
    for (const cd& v : f.values) vals.push_back({v.real(), v.imag()});
    j["values"] = std::move(vals);
    return j;
}

inline json to_json(const PhaseField& F) {
    json j;
    j["format"] = "fld-json/1";
    j["d"] = F.space.d;
    j["L"] = F.space.L;
    j["N"] = F.space.N;
    j["kind"] = "phasefield";
    json vals = json::array();
    for (const cd& v : F.values) vals.push_back({v.real(), v.imag()});
    j["values"] = std::move(vals);
    return j;
}

namespace detail {

inline void check_fld_header(const json& j, const char* kind) {
    if (!j.contains("format") || j["format"] != "fld-json/1")
        throw precondition_error("fld-format", "missing or unsupported format tag");
    if (!j.contains("kind") || j["kind"] != kind)
        throw precondition_error("fld-kind", std::string("expected kind '") + kind + "'");
}

inline std::vector<cd> read_values(const json& j, std::size_t expected) {
    const auto& vals = j.at("values");
    if (vals.size() != expected)
        throw precondition_error("fld-size", "values length does not match N^d for the declared kind");
    std::vector<cd> out;
    out.reserve(expected);
    for (const auto& v : vals) out.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    if (!all_finite(out)) throw precondition_error("fld-finite", "non-finite entry in values");
    return out;
}

}  // namespace detail

inline Field field_from_json(const json& j) {
    detail::check_fld_header(j, "field");
    Grid g(j.at("d").get<int>(), j.at("L").get<double>(), j.at("N").get<int>());
    return Field(g, detail::read_values(j, g.points()));
}

inline PhaseField phasefield_from_json(const json& j) {
    detail::check_fld_header(j, "phasefield");
    Grid g(j.at("d").get<int>(), j.at("L").get<double>(), j.at("N").get<int>());
    PhaseField F(g, g.dual());
    F.values = detail::read_values(j, g.points() * g.points());
    return F;
}

// Sequence JSON: {"indices":[[...],...],"values":[[re,im],...]} with optional
// "d1","d2","scales". Box bounds are inferred from the indices.
inline json to_json(const LatticeSeq& a) {
    json j;
    j["d1"] = a.d1;
    j["d2"] = a.d2;
    j["scales"] = a.scale;
    json idx = json::array(), vals = json::array();
    std::vector<int> i;
    for (std::size_t f = 0; f < a.values.size(); ++f) {
        if (a.values[f] == cd{0.0, 0.0}) continue;
        a.unflat(f, i);
        idx.push_back(i);
        vals.push_back({a.values[f].real(), a.values[f].imag()});
    }
    j["indices"] = std::move(idx);
    j["values"] = std::move(vals);
    return j;
}

inline LatticeSeq lattice_seq_from_json(const json& j) {
    const auto& idx = j.at("indices");
    const auto& vals = j.at("values");
    if (idx.size() != vals.size())
        throw precondition_error("seq-size", "indices and values lengths differ");
    if (idx.empty()) throw precondition_error("seq-size", "empty sequence");
    const int dims = static_cast<int>(idx[0].size());
    const int d1 = j.contains("d1") ? j["d1"].get<int>() : dims;
    const int d2 = j.contains("d2") ? j["d2"].get<int>() : dims - d1;
    if (d1 + d2 != dims) throw precondition_error("seq-dims", "d1 + d2 must match index arity");

    std::vector<int> lo(static_cast<std::size_t>(dims), 0), hi(static_cast<std::size_t>(dims), 0);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (int a = 0; a < dims; ++a) {
            const int v = idx[r][static_cast<std::size_t>(a)].get<int>();
            if (r == 0) { lo[static_cast<std::size_t>(a)] = v; hi[static_cast<std::size_t>(a)] = v; }
            lo[static_cast<std::size_t>(a)] = std::min(lo[static_cast<std::size_t>(a)], v);
            hi[static_cast<std::size_t>(a)] = std::max(hi[static_cast<std::size_t>(a)], v);
        }
    LatticeSeq out(d1, d2, lo, hi);
    if (j.contains("scales")) {
        out.scale = j["scales"].get<std::vector<double>>();
        if (out.scale.size() != static_cast<std::size_t>(dims))
            throw precondition_error("seq-dims", "scales length must match index arity");
    }
    std::vector<int> i(static_cast<std::size_t>(dims));
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (int a = 0; a < dims; ++a) i[static_cast<std::size_t>(a)] = idx[r][static_cast<std::size_t>(a)].get<int>();
        out.at(i) = cd{vals[r].at(0).get<double>(), vals[r].at(1).get<double>()};
    }
    return out;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("file-io", "cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

inline void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw precondition_error("file-io", "cannot write '" + path + "'");
    out << j.dump(1, '\t') << '\n';
}

}  // namespace gaborlab
