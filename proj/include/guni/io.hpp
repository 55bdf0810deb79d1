#pragma once

#include <json.hpp>

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "guni/classify.hpp"
#include "guni/errors.hpp"
#include "guni/families.hpp"
#include "guni/fixed_locus.hpp"
#include "guni/group.hpp"
#include "guni/lines.hpp"
#include "guni/matrix.hpp"
#include "guni/polynomial.hpp"
#include "guni/surface.hpp"

namespace guni {
namespace io {

// Insertion-ordered JSON keeps reports byte-deterministic.
using json = nlohmann::ordered_json;

inline json to_json(const CycNum& c) {
    json j;
    j["order"] = c.order();
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline CycNum cycnum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        raise(ErrorCode::ParseError, "cyclotomic number needs order and coeffs");
    long order = j.at("order").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& item : j.at("coeffs")) coeffs.push_back(Rational::parse(item.get<std::string>()));
    return CycNum(order, std::move(coeffs));
}

inline json to_json(const Matrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(i, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        raise(ErrorCode::ParseError, "matrix needs rows, cols and entries");
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    if ((int)entries.size() != rows) raise(ErrorCode::ParseError, "matrix row count mismatch");
    std::vector<CycNum> flat;
    for (const auto& row : entries) {
        if ((int)row.size() != cols) raise(ErrorCode::ParseError, "matrix column count mismatch");
        for (const auto& e : row) flat.push_back(cycnum_from_json(e));
    }
    return Matrix(rows, cols, std::move(flat));
}

inline json to_json(const SparsePoly& p) {
    json j;
    j["nvars"] = p.nvars();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["exps"] = e;
        term["coeff"] = to_json(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline SparsePoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        raise(ErrorCode::ParseError, "polynomial needs nvars and terms");
    SparsePoly p(j.at("nvars").get<int>());
    for (const auto& term : j.at("terms")) {
        std::vector<int> exps = term.at("exps").get<std::vector<int>>();
        p.add_term(std::move(exps), cycnum_from_json(term.at("coeff")));
    }
    return p;
}

inline json to_json(const Subspace& s) {
    json j;
    j["ambient"] = s.ambient();
    j["dim"] = s.dim();
    j["basis"] = to_json(s.basis());
    return j;
}

// ---- Surface input documents ----

struct SurfaceInput {
    SurfaceModel model;
    std::vector<std::pair<std::string, ProjElement>> generators; // document order
    std::vector<std::pair<std::string, std::vector<std::string>>> presets;

    std::vector<ProjElement> generators_named(const std::vector<std::string>& names) const {
        std::vector<ProjElement> out;
        for (const auto& want : names) {
            bool found = false;
            for (const auto& [name, gen] : generators)
                if (name == want) {
                    out.push_back(gen);
                    found = true;
                    break;
                }
            if (!found) raise(ErrorCode::ParseError, "unknown generator name: " + want);
        }
        return out;
    }

    std::vector<ProjElement> all_generators() const {
        std::vector<ProjElement> out;
        for (const auto& [name, gen] : generators) out.push_back(gen);
        return out;
    }

    std::vector<ProjElement> preset_generators(const std::string& name) const {
        for (const auto& [pname, glist] : presets)
            if (pname == name) return generators_named(glist);
        raise(ErrorCode::ParseError, "unknown preset name: " + name);
    }
};

inline json to_json(const FamilySpec& fam) {
    json j;
    j["family"] = fam.name();
    long order = 1;
    for (const auto& eq : fam.surface().equations())
        for (const auto& [e, c] : eq.terms()) order = std::lcm(order, c.order());
    for (const auto& gname : fam.generator_names())
        order = std::lcm(order, fam.generator(gname).lift().order());
    j["cyclotomic_order"] = order;
    j["model"] = surface_kind_name(fam.surface().kind());
    if (!fam.parameters().empty()) {
        json params;
        for (const auto& [k, v] : fam.parameters()) params[k] = v.str();
        j["parameters"] = std::move(params);
    }
    json eqs = json::array();
    for (const auto& eq : fam.surface().equations()) eqs.push_back(to_json(eq));
    j["equations"] = std::move(eqs);
    json gens;
    for (const auto& gname : fam.generator_names())
        gens[gname] = to_json(fam.generator(gname).lift());
    j["generators"] = std::move(gens);
    json presets;
    for (const auto& pname : fam.preset_names()) presets[pname] = fam.preset(pname);
    j["presets"] = std::move(presets);
    return j;
}

inline SurfaceInput surface_input_from_json(const json& j) {
    if (!j.is_object()) raise(ErrorCode::ParseError, "surface input must be a JSON object");
    if (!j.contains("model")) raise(ErrorCode::ParseError, "surface input needs a model field");
    SurfaceKind kind = surface_kind_from_name(j.at("model").get<std::string>());
    std::vector<SparsePoly> eqs;
    if (j.contains("equations"))
        for (const auto& eq : j.at("equations")) eqs.push_back(poly_from_json(eq));
    SurfaceModel model(kind, std::move(eqs));
    std::vector<std::pair<std::string, ProjElement>> gens;
    if (j.contains("generators")) {
        for (const auto& [name, mat] : j.at("generators").items()) {
            ProjElement g{matrix_from_json(mat)};
            if (g.n() != model.vec_dim())
                raise(ErrorCode::ParseError, "generator " + name + " has wrong size");
            if (!preserves_surface(g, model))
                raise(ErrorCode::ActionDoesNotPreserveSurface,
                      "generator " + name + " does not preserve the surface");
            gens.emplace_back(name, std::move(g));
        }
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> presets;
    if (j.contains("presets"))
        for (const auto& [name, glist] : j.at("presets").items())
            presets.emplace_back(name, glist.get<std::vector<std::string>>());
    SurfaceInput input{std::move(model), std::move(gens), std::move(presets)};
    for (const auto& [pname, glist] : input.presets)
        input.generators_named(glist); // validates the references
    return input;
}

// ---- Reports ----

inline json to_json(const GroupTag& tag) { return tag.str(); }

inline json to_json(const MeetResult& m) {
    json j;
    j["nonempty"] = m.nonempty;
    j["count"] = m.count_str();
    return j;
}

inline json to_json(const FixedPointReport& r) {
    json j;
    j["has_fixed_point"] = r.has_fixed_point;
    json comps = json::array();
    for (const auto& [space, meet] : r.components) {
        json c;
        c["component"] = to_json(space);
        c["meets"] = to_json(meet);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j;
}

inline json to_json(const DecisionReport& r) {
    json j;
    j["unirational"] = r.unirational;
    j["group_order"] = r.group_order;
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        json wj;
        wj["subgroup"] = w.elements;
        wj["tag"] = w.tag.str();
        wj["obstruction"] = obstruction_name(w.label);
        if (w.label != Obstruction::Unlabeled)
            wj["cremona"] = obstruction_cremona_label(w.label);
        witnesses.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(witnesses);
    json checked = json::array();
    for (const auto& c : r.checked) {
        json cj;
        cj["subgroup"] = c.elements;
        cj["tag"] = c.tag.str();
        cj["has_fixed_point"] = c.has_fixed_point;
        checked.push_back(std::move(cj));
    }
    j["checked"] = std::move(checked);
    return j;
}

inline json to_json(const TableReport& r) {
    json j;
    j["table"] = r.which;
    j["parent_order"] = r.parent_order;
    json totals;
    for (const auto& [type, count] : r.totals) totals[subgroup_type_name(type)] = count;
    j["totals"] = std::move(totals);
    j["all_crosschecks_pass"] = r.all_crosschecks_pass;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json rj;
        rj["subgroup"] = row.subgroup;
        rj["type"] = subgroup_type_name(row.type);
        rj["counts"] = row.counts;
        rj["cremona"] = row.cremona;
        rj["has_fixed_points"] = row.has_fixed_points;
        rj["crosscheck_ok"] = row.crosscheck_ok;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j;
}

} // namespace io
} // namespace guni
