#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "motives/catalog.hpp"

namespace motives {

using Json = nlohmann::ordered_json;

/*
 * Structured text format. Rationals are strings "p/q" in lowest terms ("p"
 * for integers); matrices carry explicit shapes and row-major data and are
 * dimension-checked on load. Key emission order is fixed, so exporting,
 * loading and exporting again is byte-identical.
 */
struct ModelFile {
    ModelPtr variety;
    std::optional<FibrationData> fibration;
    std::optional<std::pair<ProjectorRecipe, ProjectorRecipe>> recipes;
    std::vector<std::pair<std::string, BlowupSpec>> blowups;
};

namespace io {

inline Json matrix_to_json(const RationalMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json data = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) data.push_back(to_string(m(i, k)));
    j["data"] = std::move(data);
    return j;
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError("missing field '" + std::string(key) + "'", where);
    return j.at(key);
}

inline RationalMatrix matrix_from_json(const Json& j, const std::string& where) {
    const Json& jr = field(j, "rows", where);
    const Json& jc = field(j, "cols", where);
    const Json& jd = field(j, "data", where);
    if (!jr.is_number_unsigned() || !jc.is_number_unsigned() || !jd.is_array())
        throw ParseError("malformed matrix", where);
    const std::size_t rows = jr.get<std::size_t>(), cols = jc.get<std::size_t>();
    if (jd.size() != rows * cols)
        throw ParseError("matrix data length != rows*cols", where + ".data");
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Json& cell = jd.at(i * cols + k);
            if (!cell.is_string())
                throw ParseError("matrix entries must be rational strings",
                                 where + ".data[" + std::to_string(i * cols + k) + "]");
            m(i, k) = parse_rational(cell.get<std::string>(),
                                     where + ".data[" + std::to_string(i * cols + k) + "]");
        }
    return m;
}

inline Json vector_to_json(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_string(x));
    return j;
}

inline std::vector<Rational> vector_from_json(const Json& j, std::size_t want,
                                              const std::string& where) {
    if (!j.is_array() || j.size() != want)
        throw ParseError("expected a coordinate array of length " + std::to_string(want), where);
    std::vector<Rational> v(want);
    for (std::size_t i = 0; i < want; ++i) {
        if (!j.at(i).is_string()) throw ParseError("coordinates must be rational strings", where);
        v[i] = parse_rational(j.at(i).get<std::string>(), where + "[" + std::to_string(i) + "]");
    }
    return v;
}

inline Json variety_to_json(const VarietyModel& v) {
    Json j;
    j["name"] = v.name;
    j["dim"] = v.dim;
    j["dims"] = v.space.dims;
    j["labels"] = v.space.basis_labels;
    Json flags = Json::array();
    for (const auto& f : v.space.algebraic_flags) {
        Json row = Json::array();
        for (bool b : f) row.push_back(b);
        flags.push_back(std::move(row));
    }
    j["algebraic_flags"] = std::move(flags);
    Json pairings = Json::array();
    for (const auto& p : v.pairings) pairings.push_back(matrix_to_json(p));
    j["pairings"] = std::move(pairings);
    return j;
}

inline ModelPtr variety_from_json(const Json& j, const std::string& where) {
    auto m = std::make_shared<VarietyModel>();
    const Json& jn = field(j, "name", where);
    const Json& jd = field(j, "dim", where);
    if (!jn.is_string() || !jd.is_number_unsigned())
        throw ParseError("variety needs a name and a dimension", where);
    m->name = jn.get<std::string>();
    m->dim = jd.get<std::size_t>();
    const std::size_t n = 2 * m->dim + 1;

    const Json& dims = field(j, "dims", where);
    if (!dims.is_array() || dims.size() != n)
        throw ParseError("dims must list degrees 0..2d", where + ".dims");
    for (const auto& d : dims) {
        if (!d.is_number_unsigned()) throw ParseError("dims must be counts", where + ".dims");
        m->space.dims.push_back(d.get<std::size_t>());
    }

    const Json& labels = field(j, "labels", where);
    if (!labels.is_array() || labels.size() != n)
        throw ParseError("labels must list degrees 0..2d", where + ".labels");
    for (std::size_t k = 0; k < n; ++k) {
        const Json& row = labels.at(k);
        if (!row.is_array() || row.size() != m->space.dims[k])
            throw ParseError("label count mismatch", where + ".labels[" + std::to_string(k) + "]");
        std::vector<std::string> ls;
        for (const auto& l : row) {
            if (!l.is_string()) throw ParseError("labels must be strings", where + ".labels");
            ls.push_back(l.get<std::string>());
        }
        m->space.basis_labels.push_back(std::move(ls));
    }

    const Json& flags = field(j, "algebraic_flags", where);
    if (!flags.is_array() || flags.size() != n)
        throw ParseError("algebraic_flags must list degrees 0..2d", where + ".algebraic_flags");
    for (std::size_t k = 0; k < n; ++k) {
        const Json& row = flags.at(k);
        const std::size_t want = k % 2 == 0 ? m->space.dims[k] : 0;
        if (!row.is_array() || row.size() != want)
            throw ParseError("flag count mismatch",
                             where + ".algebraic_flags[" + std::to_string(k) + "]");
        std::vector<bool> fs;
        for (const auto& f : row) {
            if (!f.is_boolean()) throw ParseError("flags must be booleans", where);
            fs.push_back(f.get<bool>());
        }
        m->space.algebraic_flags.push_back(std::move(fs));
    }

    const Json& pairings = field(j, "pairings", where);
    if (!pairings.is_array() || pairings.size() != n)
        throw ParseError("pairings must list degrees 0..2d", where + ".pairings");
    for (std::size_t k = 0; k < n; ++k) {
        RationalMatrix p =
            matrix_from_json(pairings.at(k), where + ".pairings[" + std::to_string(k) + "]");
        if (p.rows() != m->space.dims[k] || p.cols() != m->space.dims[2 * m->dim - k])
            throw ParseError("pairing shape mismatch",
                             where + ".pairings[" + std::to_string(k) + "]");
        m->pairings.push_back(std::move(p));
    }
    return m;
}

inline Json correspondence_to_json(const Correspondence& c) {
    Json blocks = Json::array();
    for (std::size_t k = 0; k < c.blocks.size(); ++k) {
        Json b;
        b["degree"] = k;
        b["block"] = matrix_to_json(c.blocks[k]);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

inline Correspondence correspondence_from_json(const Json& j, const ModelPtr& x, const ModelPtr& y,
                                               const std::string& where) {
    Correspondence c = zero_correspondence(x, y);
    if (!j.is_array() || j.size() != c.blocks.size())
        throw ParseError("correspondence must list blocks for degrees 0..2d", where);
    for (std::size_t k = 0; k < c.blocks.size(); ++k) {
        const Json& jb = j.at(k);
        const std::string bw = where + "[" + std::to_string(k) + "]";
        if (field(jb, "degree", bw).get<std::size_t>() != k)
            throw ParseError("blocks must be listed degree-major", bw);
        RationalMatrix b = matrix_from_json(field(jb, "block", bw), bw + ".block");
        if (b.rows() != c.blocks[k].rows() || b.cols() != c.blocks[k].cols())
            throw ParseError("block shape mismatch", bw + ".block");
        c.blocks[k] = std::move(b);
    }
    return c;
}

inline Json morphism_pullback_to_json(const MorphismModel& m) {
    Json j = Json::array();
    for (const auto& p : m.pullback) j.push_back(matrix_to_json(p));
    return j;
}

inline std::vector<RationalMatrix> pullback_from_json(const Json& j, const ModelPtr& src,
                                                      const ModelPtr& tgt,
                                                      const std::string& where) {
    if (!j.is_array() || j.size() != 2 * src->dim + 1)
        throw ParseError("pullback must list degrees 0..2d of the source", where);
    std::vector<RationalMatrix> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        RationalMatrix p = matrix_from_json(j.at(k), where + "[" + std::to_string(k) + "]");
        if (p.rows() != tgt->dim_at(static_cast<long>(k)) || p.cols() != src->space.dims[k])
            throw ParseError("pullback shape mismatch", where + "[" + std::to_string(k) + "]");
        out.push_back(std::move(p));
    }
    return out;
}

inline Json fibration_to_json(const FibrationData& d) {
    Json j;
    j["base"] = variety_to_json(*d.S);
    j["section"] = variety_to_json(*d.Z);
    j["m"] = to_string(d.m);
    j["f_pullback"] = morphism_pullback_to_json(d.f);
    j["h_pullback"] = morphism_pullback_to_json(d.h);
    j["i_pullback"] = morphism_pullback_to_json(d.i);
    j["hyperplane_class"] = vector_to_json(d.hyperplane_class.coords);
    Json sp = Json::array();
    for (const auto& p : d.surface_projectors) sp.push_back(correspondence_to_json(p));
    j["surface_projectors"] = std::move(sp);
    return j;
}

inline FibrationData fibration_from_json(const Json& j, const ModelPtr& y,
                                         const std::string& where) {
    FibrationData d;
    d.Y = y;
    d.S = variety_from_json(field(j, "base", where), where + ".base");
    d.Z = variety_from_json(field(j, "section", where), where + ".section");
    const Json& jm = field(j, "m", where);
    if (!jm.is_string()) throw ParseError("m must be a rational string", where + ".m");
    d.m = parse_rational(jm.get<std::string>(), where + ".m");

    d.f.source = d.S;
    d.f.target = y;
    d.f.pullback = pullback_from_json(field(j, "f_pullback", where), d.S, y, where + ".f_pullback");
    d.h.source = d.S;
    d.h.target = d.Z;
    d.h.pullback =
        pullback_from_json(field(j, "h_pullback", where), d.S, d.Z, where + ".h_pullback");
    d.h.declared_degree = d.m;
    d.i.source = y;
    d.i.target = d.Z;
    d.i.pullback = pullback_from_json(field(j, "i_pullback", where), y, d.Z, where + ".i_pullback");

    d.hyperplane_class.variety = y;
    d.hyperplane_class.degree = 2;
    d.hyperplane_class.coords = vector_from_json(field(j, "hyperplane_class", where),
                                                 y->space.dims[2], where + ".hyperplane_class");

    const Json& sp = field(j, "surface_projectors", where);
    if (!sp.is_array() || sp.size() != 5)
        throw ParseError("surface_projectors must list pi_0..pi_4", where + ".surface_projectors");
    for (std::size_t a = 0; a < 5; ++a)
        d.surface_projectors.push_back(correspondence_from_json(
            sp.at(a), d.S, d.S, where + ".surface_projectors[" + std::to_string(a) + "]"));
    return d;
}

inline Json recipe_to_json(const ProjectorRecipe& r) {
    Json j;
    j["q"] = r.q;
    Json e = Json::array(), l = Json::array();
    for (const auto& v : r.E_basis) e.push_back(vector_to_json(v.coords));
    for (const auto& v : r.L_basis) l.push_back(vector_to_json(v.coords));
    j["E_basis"] = std::move(e);
    j["L_basis"] = std::move(l);
    return j;
}

inline ProjectorRecipe recipe_from_json(const Json& j, const ModelPtr& x,
                                        const std::string& where) {
    const Json& jq = field(j, "q", where);
    if (!jq.is_number_unsigned()) throw ParseError("q must be a degree", where + ".q");
    const std::size_t q = jq.get<std::size_t>();
    if (q < 1 || q + 1 > x->dim) throw ParseError("q out of range", where + ".q");
    const Json& je = field(j, "E_basis", where);
    const Json& jl = field(j, "L_basis", where);
    if (!je.is_array() || !jl.is_array()) throw ParseError("recipe bases must be arrays", where);
    std::vector<ClassVector> e, l;
    for (std::size_t i = 0; i < je.size(); ++i)
        e.push_back({x, 2 * q,
                     vector_from_json(je.at(i), x->space.dims[2 * q],
                                      where + ".E_basis[" + std::to_string(i) + "]")});
    for (std::size_t i = 0; i < jl.size(); ++i)
        l.push_back({x, 2 * (x->dim - q),
                     vector_from_json(jl.at(i), x->space.dims[2 * (x->dim - q)],
                                      where + ".L_basis[" + std::to_string(i) + "]")});
    return make_projector_recipe(x, q, std::move(e), std::move(l));
}

inline Json blowup_to_json(const std::string& name, const BlowupSpec& s) {
    Json j;
    j["name"] = name;
    j["center"] = s.center_kind == BlowupSpec::Center::point ? "point" : "curve";
    j["genus"] = s.center_h1_dim / 2;
    Json labels = Json::array();
    for (const auto& l : s.names) labels.push_back(l);
    j["labels"] = std::move(labels);
    return j;
}

inline std::pair<std::string, BlowupSpec> blowup_from_json(const Json& j, const ModelPtr& base,
                                                           const std::string& where) {
    BlowupSpec s;
    s.base = base;
    const Json& jn = field(j, "name", where);
    const Json& jc = field(j, "center", where);
    const Json& jg = field(j, "genus", where);
    if (!jn.is_string() || !jc.is_string() || !jg.is_number_unsigned())
        throw ParseError("malformed blow-up spec", where);
    const std::string center = jc.get<std::string>();
    if (center == "point")
        s.center_kind = BlowupSpec::Center::point;
    else if (center == "curve")
        s.center_kind = BlowupSpec::Center::curve;
    else
        throw ParseError("center must be 'point' or 'curve'", where + ".center");
    s.center_h1_dim = 2 * jg.get<std::size_t>();
    if (s.center_kind == BlowupSpec::Center::point && s.center_h1_dim != 0)
        throw ParseError("a point center has genus 0", where + ".genus");
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) {
            if (!l.is_string()) throw ParseError("labels must be strings", where + ".labels");
            s.names.push_back(l.get<std::string>());
        }
    return {jn.get<std::string>(), s};
}

}  // namespace io

inline std::string save_model_file(const ModelFile& f) {
    Json j;
    j["variety"] = io::variety_to_json(*f.variety);
    if (f.fibration) j["fibration"] = io::fibration_to_json(*f.fibration);
    if (f.recipes) {
        Json r;
        r["q1"] = io::recipe_to_json(f.recipes->first);
        r["q2"] = io::recipe_to_json(f.recipes->second);
        j["recipes"] = std::move(r);
    }
    if (!f.blowups.empty()) {
        Json b = Json::array();
        for (const auto& [name, spec] : f.blowups) b.push_back(io::blowup_to_json(name, spec));
        j["blowups"] = std::move(b);
    }
    return j.dump(2) + "\n";
}

inline ModelFile load_model_file(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
    // structural and dimension checks only; semantic invariants are the
    // validators' business, so an ill-pairing model still loads and reports
    ModelFile f;
    f.variety = io::variety_from_json(io::field(j, "variety", "$"), "variety");
    if (j.contains("fibration"))
        f.fibration = io::fibration_from_json(j.at("fibration"), f.variety, "fibration");
    if (j.contains("recipes")) {
        const Json& r = j.at("recipes");
        f.recipes = {io::recipe_from_json(io::field(r, "q1", "recipes"), f.variety, "recipes.q1"),
                     io::recipe_from_json(io::field(r, "q2", "recipes"), f.variety, "recipes.q2")};
    }
    if (j.contains("blowups")) {
        const Json& b = j.at("blowups");
        if (!b.is_array()) throw ParseError("blowups must be an array", "blowups");
        for (std::size_t i = 0; i < b.size(); ++i)
            f.blowups.push_back(
                io::blowup_from_json(b.at(i), f.variety, "blowups[" + std::to_string(i) + "]"));
    }
    return f;
}

inline ModelFile catalog_entry_to_file(const CatalogEntry& e) {
    ModelFile f;
    f.variety = e.model;
    f.fibration = e.fibration;
    f.recipes = e.recipes;
    return f;
}

}  // namespace motives
