#pragma once

/// JSON problem descriptions. A spec names a field and then some subset of:
/// a Hopf algebra (explicit structure constants, or a group multiplication
/// table shorthand), an algebra, and an action. Actions come in two forms:
/// an explicit table e_h . e_a -> coordinates, or classical group partial
/// action data (central idempotents plus isomorphisms between the ideals)
/// from which the linearized action is derived and validated.
///
/// Layout:
///
///   {
///     "name": "optional label",
///     "field": "Q" | "Fp:<p>",
///     "hopf": { "group": [[0,1],[1,0]] }
///           | { "dim": n, "unit": [...], "mult": [[v,...],...],
///               "comul": [[[p,q,"c"],...],...], "counit": [...],
///               "antipode": [v,...] },
///     "algebra": { "dim": n, "unit": [...], "mult": [[v,...],...] },
///     "action": [ [v,...], ... ]          // action[h][a], h outer
///     "group_action": { "table": [[...]], "idempotents": [v,...],
///                       "isos": [[[...],...],...] }   // matrices by rows
///   }
///
/// Scalars are JSON integers or strings ("7", "-2/3" over Q). Parsing is
/// strict: wrong shapes and unknown top level keys are ParseErrors with the
/// offending path in the message.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "phk/error.hpp"
#include "phk/groups.hpp"
#include "phk/hopf.hpp"
#include "phk/paction.hpp"
#include "phk/scalar.hpp"

namespace phk {

namespace specdetail {

using nlohmann::json;

inline Scalar scalar_from(const Field& f, const json& j, const std::string& at) {
    if (j.is_number_integer()) return f.from_long(j.get<long>());
    if (j.is_string()) {
        try {
            return f.parse_scalar(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(at + ": " + e.what());
        }
    }
    throw ParseError(at + ": expected an integer or a scalar string");
}

inline Vec vec_from(const Field& f, const json& j, std::size_t len, const std::string& at) {
    if (!j.is_array() || j.size() != len)
        throw ParseError(at + ": expected an array of length " + std::to_string(len));
    Vec v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        v.push_back(scalar_from(f, j[i], at + "[" + std::to_string(i) + "]"));
    return v;
}

inline Matrix matrix_from(const Field& f, const json& j, std::size_t rows,
                          std::size_t cols, const std::string& at) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(at + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vec row = vec_from(f, j[r], cols, at + "[" + std::to_string(r) + "]");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

inline bool nonneg_int(const json& j, std::size_t& out) {
    if (j.is_number_unsigned()) {
        out = j.get<std::size_t>();
        return true;
    }
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (v < 0) return false;
        out = static_cast<std::size_t>(v);
        return true;
    }
    return false;
}

inline std::size_t dim_from(const json& j, const std::string& at) {
    std::size_t n = 0;
    if (!nonneg_int(j, n) || n == 0)
        throw ParseError(at + ": expected a positive dimension");
    return n;
}

inline GroupTable table_from(const json& j, const std::string& at) {
    if (!j.is_array() || j.empty())
        throw ParseError(at + ": expected a nonempty multiplication table");
    const std::size_t n = j.size();
    GroupTable t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        if (!j[a].is_array() || j[a].size() != n)
            throw ParseError(at + ": row " + std::to_string(a) + " must have length " +
                             std::to_string(n));
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t v = 0;
            if (!nonneg_int(j[a][b], v) || v >= n)
                throw ParseError(at + "[" + std::to_string(a) + "][" + std::to_string(b) +
                                 "]: entries must index the group");
            t[a][b] = v;
        }
    }
    return t;
}

inline FinDimAlgebra algebra_from(const Field& f, const json& j, const std::string& at) {
    if (!j.is_object()) throw ParseError(at + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (k != "dim" && k != "unit" && k != "mult")
            throw ParseError(at + ": unknown key '" + k + "'");
    if (!j.contains("dim") || !j.contains("unit") || !j.contains("mult"))
        throw ParseError(at + ": needs dim, unit and mult");
    const std::size_t n = dim_from(j["dim"], at + ".dim");
    FinDimAlgebra a(n, f);
    a.set_unit(vec_from(f, j["unit"], n, at + ".unit"));
    const json& mult = j["mult"];
    if (!mult.is_array() || mult.size() != n)
        throw ParseError(at + ".mult: expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (!mult[i].is_array() || mult[i].size() != n)
            throw ParseError(at + ".mult[" + std::to_string(i) + "]: expected " +
                             std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k)
            a.set_product(i, k,
                          vec_from(f, mult[i][k], n,
                                   at + ".mult[" + std::to_string(i) + "][" +
                                       std::to_string(k) + "]"));
    }
    return a;
}

inline HopfAlgebra hopf_from(const Field& f, const json& j, const std::string& at) {
    if (!j.is_object()) throw ParseError(at + ": expected an object");
    if (j.contains("group")) {
        for (const auto& [k, v] : j.items())
            if (k != "group") throw ParseError(at + ": 'group' excludes other keys");
        return group_hopf(table_from(j["group"], at + ".group"), f);
    }
    for (const auto& [k, v] : j.items())
        if (k != "dim" && k != "unit" && k != "mult" && k != "comul" && k != "counit" &&
            k != "antipode")
            throw ParseError(at + ": unknown key '" + k + "'");
    for (const char* key : {"dim", "unit", "mult", "comul", "counit", "antipode"})
        if (!j.contains(key))
            throw ParseError(at + ": needs dim, unit, mult, comul, counit, antipode");

    FinDimAlgebra alg = algebra_from(
        f, json{{"dim", j["dim"]}, {"unit", j["unit"]}, {"mult", j["mult"]}}, at);
    const std::size_t n = alg.dim();

    Matrix comul(n * n, n, f);
    const json& cm = j["comul"];
    if (!cm.is_array() || cm.size() != n)
        throw ParseError(at + ".comul: expected one entry list per basis element");
    for (std::size_t b = 0; b < n; ++b) {
        const std::string bat = at + ".comul[" + std::to_string(b) + "]";
        if (!cm[b].is_array()) throw ParseError(bat + ": expected a list of triples");
        for (std::size_t e = 0; e < cm[b].size(); ++e) {
            const json& tr = cm[b][e];
            if (!tr.is_array() || tr.size() != 3)
                throw ParseError(bat + "[" + std::to_string(e) + "]: expected [p, q, c]");
            std::size_t p = 0, q = 0;
            if (!nonneg_int(tr[0], p) || p >= n || !nonneg_int(tr[1], q) || q >= n)
                throw ParseError(bat + "[" + std::to_string(e) + "]: bad tensor index");
            comul.at(p * n + q, b) +=
                scalar_from(f, tr[2], bat + "[" + std::to_string(e) + "][2]");
        }
    }

    Matrix counit(1, n, f);
    const Vec eps = vec_from(f, j["counit"], n, at + ".counit");
    for (std::size_t b = 0; b < n; ++b) counit.at(0, b) = eps[b];

    const json& ant = j["antipode"];
    if (!ant.is_array() || ant.size() != n)
        throw ParseError(at + ".antipode: expected one image per basis element");
    Matrix antipode(n, n, f);
    for (std::size_t b = 0; b < n; ++b)
        antipode.set_col(b, vec_from(f, ant[b], n,
                                     at + ".antipode[" + std::to_string(b) + "]"));

    return HopfAlgebra(std::move(alg), std::move(comul), std::move(counit),
                       std::move(antipode));
}

} // namespace specdetail

struct SpecFile {
    std::string name;
    Field field = Field::rationals();
    std::optional<HopfAlgebra> hopf;
    std::optional<FinDimAlgebra> algebra;
    std::optional<Matrix> action; // dim(A) x dim(H)*dim(A), column h*na + a
    std::optional<GroupPartialActionData> group_action;

    bool has_action() const { return action.has_value() || group_action.has_value(); }
};

inline SpecFile parse_specfile(const nlohmann::json& j) {
    using specdetail::json;
    if (!j.is_object()) throw ParseError("spec: expected a JSON object");
    for (const auto& [k, v] : j.items())
        if (k != "name" && k != "field" && k != "hopf" && k != "algebra" &&
            k != "action" && k != "group_action")
            throw ParseError("spec: unknown key '" + k + "'");
    if (!j.contains("field") || !j["field"].is_string())
        throw ParseError("spec.field: required, \"Q\" or \"Fp:<p>\"");

    SpecFile s;
    auto f = Field::parse(j["field"].get<std::string>());
    if (!f) throw ParseError("spec.field: unrecognized descriptor");
    s.field = *f;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("spec.name: expected a string");
        s.name = j["name"].get<std::string>();
    }
    if (j.contains("algebra"))
        s.algebra = specdetail::algebra_from(s.field, j["algebra"], "spec.algebra");
    if (j.contains("hopf"))
        s.hopf = specdetail::hopf_from(s.field, j["hopf"], "spec.hopf");

    if (j.contains("action") && j.contains("group_action"))
        throw ParseError("spec: action and group_action are mutually exclusive");

    if (j.contains("action")) {
        if (!s.hopf) throw ParseError("spec.action: needs a hopf block");
        if (!s.algebra) throw ParseError("spec.action: needs an algebra block");
        const std::size_t nh = s.hopf->dim(), na = s.algebra->dim();
        const json& act = j["action"];
        if (!act.is_array() || act.size() != nh)
            throw ParseError("spec.action: expected one row per hopf basis element");
        Matrix m(na, nh * na, s.field);
        for (std::size_t h = 0; h < nh; ++h) {
            const std::string hat = "spec.action[" + std::to_string(h) + "]";
            if (!act[h].is_array() || act[h].size() != na)
                throw ParseError(hat + ": expected one image per algebra basis element");
            for (std::size_t a = 0; a < na; ++a)
                m.set_col(h * na + a,
                          specdetail::vec_from(s.field, act[h][a], na,
                                               hat + "[" + std::to_string(a) + "]"));
        }
        s.action = std::move(m);
    }

    if (j.contains("group_action")) {
        if (s.hopf)
            throw ParseError("spec.group_action: the hopf is derived, drop the hopf block");
        if (!s.algebra) throw ParseError("spec.group_action: needs an algebra block");
        const json& ga = j["group_action"];
        if (!ga.is_object()) throw ParseError("spec.group_action: expected an object");
        for (const auto& [k, v] : ga.items())
            if (k != "table" && k != "idempotents" && k != "isos")
                throw ParseError("spec.group_action: unknown key '" + k + "'");
        if (!ga.contains("table") || !ga.contains("idempotents") || !ga.contains("isos"))
            throw ParseError("spec.group_action: needs table, idempotents and isos");
        GroupTable table = specdetail::table_from(ga["table"], "spec.group_action.table");
        const std::size_t m = table.size(), na = s.algebra->dim();
        const json& idem = ga["idempotents"];
        const json& isos = ga["isos"];
        if (!idem.is_array() || idem.size() != m)
            throw ParseError("spec.group_action.idempotents: expected one per group element");
        if (!isos.is_array() || isos.size() != m)
            throw ParseError("spec.group_action.isos: expected one per group element");
        std::vector<Vec> idempotents;
        std::vector<Matrix> iso_mats;
        for (std::size_t g = 0; g < m; ++g) {
            idempotents.push_back(specdetail::vec_from(
                s.field, idem[g], na,
                "spec.group_action.idempotents[" + std::to_string(g) + "]"));
            iso_mats.push_back(specdetail::matrix_from(
                s.field, isos[g], na, na,
                "spec.group_action.isos[" + std::to_string(g) + "]"));
        }
        s.group_action = GroupPartialActionData{std::move(table), *s.algebra,
                                                std::move(idempotents), std::move(iso_mats)};
    }
    return s;
}

inline SpecFile load_specfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_specfile(j);
}

/// The hopf of the spec: the explicit block, or the group algebra of the
/// classical data's table.
inline HopfAlgebra spec_hopf(const SpecFile& s) {
    if (s.hopf) return *s.hopf;
    if (s.group_action) return group_hopf(s.group_action->table, s.field);
    throw PreconditionError("spec has no hopf data");
}

/// The action of the spec. Explicit tables come back unchecked; classical
/// group data is validated and linearized (StructuralError on bad data).
inline PartialAction spec_action(const SpecFile& s) {
    if (s.action) return PartialAction(spec_hopf(s), *s.algebra, *s.action);
    if (s.group_action) return from_group_partial_action(*s.group_action);
    throw PreconditionError("spec has no action data");
}

namespace specdetail {

inline nlohmann::ordered_json vec_to_json(const Vec& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const Scalar& c : v) a.push_back(c.to_string());
    return a;
}

inline nlohmann::ordered_json matrix_rows_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::ordered_json algebra_to_json(const FinDimAlgebra& a) {
    nlohmann::ordered_json j;
    j["dim"] = a.dim();
    j["unit"] = vec_to_json(a.unit());
    nlohmann::ordered_json mult = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < a.dim(); ++k)
            row.push_back(vec_to_json(a.basis_product(i, k)));
        mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
    return j;
}

inline nlohmann::ordered_json hopf_to_json(const HopfAlgebra& h) {
    nlohmann::ordered_json j = algebra_to_json(h.algebra());
    const std::size_t n = h.dim();
    nlohmann::ordered_json comul = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < n; ++b) {
        nlohmann::ordered_json triples = nlohmann::ordered_json::array();
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = h.comul().at(p * n + q, b);
                if (!c.is_zero())
                    triples.push_back(nlohmann::ordered_json::array({p, q, c.to_string()}));
            }
        comul.push_back(std::move(triples));
    }
    j["comul"] = std::move(comul);
    nlohmann::ordered_json eps = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < n; ++b) eps.push_back(h.counit_map().at(0, b).to_string());
    j["counit"] = std::move(eps);
    nlohmann::ordered_json ant = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < n; ++b) ant.push_back(vec_to_json(h.antipode().col(b)));
    j["antipode"] = std::move(ant);
    return j;
}

} // namespace specdetail

/// Canonical serialization. Group-data specs keep the classical form;
/// everything else is written out explicitly. parse(serialize(s)) rebuilds
/// the same action.
inline nlohmann::ordered_json specfile_to_json(const SpecFile& s) {
    nlohmann::ordered_json j;
    if (!s.name.empty()) j["name"] = s.name;
    j["field"] = s.field.to_string();
    if (s.group_action) {
        j["algebra"] = specdetail::algebra_to_json(s.group_action->algebra);
        nlohmann::ordered_json ga;
        nlohmann::ordered_json table = nlohmann::ordered_json::array();
        for (const auto& row : s.group_action->table) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (std::size_t x : row) r.push_back(x);
            table.push_back(std::move(r));
        }
        ga["table"] = std::move(table);
        nlohmann::ordered_json idem = nlohmann::ordered_json::array();
        for (const Vec& v : s.group_action->idempotents)
            idem.push_back(specdetail::vec_to_json(v));
        ga["idempotents"] = std::move(idem);
        nlohmann::ordered_json isos = nlohmann::ordered_json::array();
        for (const Matrix& m : s.group_action->isos)
            isos.push_back(specdetail::matrix_rows_to_json(m));
        ga["isos"] = std::move(isos);
        j["group_action"] = std::move(ga);
        return j;
    }
    if (s.hopf) j["hopf"] = specdetail::hopf_to_json(*s.hopf);
    if (s.algebra) j["algebra"] = specdetail::algebra_to_json(*s.algebra);
    if (s.action) {
        const std::size_t nh = s.hopf->dim(), na = s.algebra->dim();
        nlohmann::ordered_json act = nlohmann::ordered_json::array();
        for (std::size_t h = 0; h < nh; ++h) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t a = 0; a < na; ++a)
                row.push_back(specdetail::vec_to_json(s.action->col(h * na + a)));
            act.push_back(std::move(row));
        }
        j["action"] = std::move(act);
    }
    return j;
}

} // namespace phk
