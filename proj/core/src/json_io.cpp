#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace qrep::detail {

Json parse_document(const std::string& text, const std::string& source_name) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source_name, 1, "", e.what());
    }
}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["name"] = q.name();
    Json vertices = Json::array();
    for (VertexId v = 0; v < q.vertex_count(); ++v) vertices.push_back(q.vertex_name(v));
    j["vertices"] = std::move(vertices);
    Json arrows = Json::array();
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        arrows.push_back(Json::array({ar.name, q.vertex_name(ar.source), q.vertex_name(ar.target)}));
    }
    j["arrows"] = std::move(arrows);
    return j;
}

Quiver quiver_from_json(const Json& j, const std::string& source_name) {
    if (!j.is_object()) throw ParseError(source_name, 1, "", "inline quiver must be an object");
    Quiver q(j.value("name", std::string("unnamed")));
    try {
        for (const auto& v : j.value("vertices", Json::array())) {
            q.add_vertex(v.get<std::string>());
        }
        for (const auto& a : j.value("arrows", Json::array())) {
            if (!a.is_array() || a.size() != 3) {
                throw InputError("arrow entries must be [id, source, target]");
            }
            q.add_arrow(a[0].get<std::string>(), a[1].get<std::string>(), a[2].get<std::string>());
        }
    } catch (const Error& e) {
        throw ParseError(source_name, 1, "", e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source_name, 1, "", e.what());
    }
    return q;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const Field& f, const std::string& source_name) {
    if (!j.is_array()) throw ParseError(source_name, 1, "", "matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw ParseError(source_name, 1, "", "ragged matrix rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& cell = j[i][c];
            try {
                if (cell.is_string()) {
                    m.at(i, c) = Scalar::parse(f, cell.get<std::string>());
                } else if (cell.is_number_integer()) {
                    m.at(i, c) = Scalar::from_int(f, cell.get<long long>());
                } else {
                    throw InputError("matrix entries must be scalar strings");
                }
            } catch (const Error& e) {
                throw ParseError(source_name, 1, cell.dump(), e.what());
            }
        }
    }
    return m;
}

Json rep_to_json(const Representation& m) {
    const Quiver& q = m.quiver();
    Json j;
    j["quiver"] = quiver_to_json(q);
    j["field"] = m.field().to_string();
    Json dims;
    for (VertexId v = 0; v < q.vertex_count(); ++v) dims[q.vertex_name(v)] = m.dim(v);
    j["dims"] = std::move(dims);
    Json mats;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) mats[q.arrow(a).name] = matrix_to_json(m.mat(a));
    j["mats"] = std::move(mats);
    return j;
}

Representation rep_from_json(const Json& j, const std::string& source_name,
                             std::shared_ptr<const Quiver> context) {
    if (!j.is_object()) throw ParseError(source_name, 1, "", "representation must be an object");
    if (!j.contains("quiver")) throw ParseError(source_name, 1, "", "missing 'quiver'");
    std::shared_ptr<const Quiver> quiver;
    const Json& qj = j["quiver"];
    if (qj.is_string()) {
        if (!context) {
            throw ParseError(source_name, 1, qj.get<std::string>(),
                             "representation names a quiver but none was supplied (use --quiver)");
        }
        if (context->name() != qj.get<std::string>()) {
            throw ParseError(source_name, 1, qj.get<std::string>(),
                             "representation names quiver '" + qj.get<std::string>() +
                                 "' but '" + context->name() + "' was supplied");
        }
        quiver = context;
    } else {
        quiver = std::make_shared<const Quiver>(quiver_from_json(qj, source_name));
    }
    if (!j.contains("field") || !j["field"].is_string()) {
        throw ParseError(source_name, 1, "", "missing 'field'");
    }
    Field field = Field::rationals();
    try {
        field = Field::parse(j["field"].get<std::string>());
    } catch (const Error& e) {
        throw ParseError(source_name, 1, j["field"].get<std::string>(), e.what());
    }

    std::vector<std::size_t> dims(quiver->vertex_count(), 0);
    Json dims_json = j.value("dims", Json::object());
    for (const auto& [key, value] : dims_json.items()) {
        auto v = quiver->find_vertex(key);
        if (!v) throw ParseError(source_name, 1, key, "dims references an unknown vertex");
        if (!value.is_number_unsigned()) throw ParseError(source_name, 1, key, "dims must be nonnegative integers");
        dims[*v] = value.get<std::size_t>();
    }
    std::vector<Matrix> mats;
    Json mats_json = j.value("mats", Json::object());
    for (const auto& [key, value] : mats_json.items()) {
        if (!quiver->find_arrow(key)) {
            throw ParseError(source_name, 1, key, "mats references an unknown arrow");
        }
        (void)value;
    }
    for (ArrowId a = 0; a < quiver->arrow_count(); ++a) {
        const Arrow& ar = quiver->arrow(a);
        if (mats_json.contains(ar.name)) {
            mats.push_back(matrix_from_json(mats_json[ar.name], field, source_name));
        } else {
            // omitted matrices are zero maps; required shape comes from dims
            mats.push_back(Matrix(field, dims[ar.target], dims[ar.source]));
        }
    }
    try {
        return Representation(std::move(quiver), field, std::move(dims), std::move(mats));
    } catch (const Error& e) {
        throw ParseError(source_name, 1, "", e.what());
    }
}

Json morphism_comps_to_json(const RepMorphism& f) {
    const Quiver& q = f.source().quiver();
    Json comps;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        comps[q.vertex_name(v)] = matrix_to_json(f.comp(v));
    }
    return comps;
}

Json morphism_to_json_full(const RepMorphism& f) {
    Json j;
    j["quiver"] = quiver_to_json(f.source().quiver());
    j["field"] = f.source().field().to_string();
    Json src = rep_to_json(f.source());
    src.erase("quiver");
    src.erase("field");
    Json tgt = rep_to_json(f.target());
    tgt.erase("quiver");
    tgt.erase("field");
    j["source"] = std::move(src);
    j["target"] = std::move(tgt);
    j["comps"] = morphism_comps_to_json(f);
    return j;
}

Json extnat_to_json(const ExtNat& v) {
    if (v.is_finite()) return v.value;
    return v.to_string();
}

ExtNat extnat_from_json(const Json& j, const std::string& source_name) {
    if (j.is_number_unsigned()) return ExtNat::finite(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            return ExtNat::parse(j.get<std::string>());
        } catch (const Error& e) {
            throw ParseError(source_name, 1, j.get<std::string>(), e.what());
        }
    }
    throw ParseError(source_name, 1, j.dump(), "expected a number, 'infinite' or 'unknown'");
}

Json profile_to_json(const RingProfile& p) {
    Json j;
    j["name"] = p.name();
    j["self_injective"] = p.self_injective();
    Json terms = Json::array();
    for (std::size_t i = 0; i < p.listed_terms(); ++i) {
        Json t;
        t["fd"] = extnat_to_json(p.fd(i));
        terms.push_back(std::move(t));
    }
    j["inj_terms"] = std::move(terms);
    j["exact_length"] = p.exact_length();
    j["dom_dim"] = extnat_to_json(p.dom_dim());
    j["gorenstein_all_k"] = p.gorenstein_all_k().has_value() ? Json(*p.gorenstein_all_k()) : Json();
    Json gor = Json::object();
    for (const auto& [k, flag] : p.gorenstein_map()) gor[std::to_string(k)] = flag;
    j["gorenstein"] = std::move(gor);
    return j;
}

RingProfile profile_from_json(const Json& j, const std::string& source_name) {
    if (!j.is_object()) throw ParseError(source_name, 1, "", "profile must be an object");
    std::string name = j.value("name", std::string("R"));
    std::vector<RingProfile::InjTerm> terms;
    for (const auto& t : j.value("inj_terms", Json::array())) {
        if (t.is_object() && t.contains("fd")) {
            terms.push_back(RingProfile::InjTerm{extnat_from_json(t["fd"], source_name)});
        } else {
            terms.push_back(RingProfile::InjTerm{extnat_from_json(t, source_name)});
        }
    }
    bool exact_length = j.value("exact_length", false);
    ExtNat dom_dim = ExtNat::unknown();
    if (j.contains("dom_dim")) dom_dim = extnat_from_json(j["dom_dim"], source_name);
    std::optional<bool> all_k;
    if (j.contains("gorenstein_all_k") && !j["gorenstein_all_k"].is_null()) {
        if (!j["gorenstein_all_k"].is_boolean()) {
            throw ParseError(source_name, 1, "gorenstein_all_k", "must be a boolean or null");
        }
        all_k = j["gorenstein_all_k"].get<bool>();
    }
    std::map<std::uint64_t, bool> gorenstein;
    Json gorenstein_json = j.value("gorenstein", Json::object());
    for (const auto& [key, value] : gorenstein_json.items()) {
        if (key.find_first_not_of("0123456789") != std::string::npos || !value.is_boolean()) {
            throw ParseError(source_name, 1, key, "gorenstein map entries must be {k: bool}");
        }
        gorenstein[std::stoull(key)] = value.get<bool>();
    }
    bool self_injective = j.value("self_injective", false);
    try {
        return RingProfile(std::move(name), std::move(terms), exact_length, dom_dim, all_k,
                           std::move(gorenstein), self_injective);
    } catch (const Error& e) {
        throw ParseError(source_name, 1, "", e.what());
    }
}

Json formal_to_json(const Quiver& q, const FormalInjective& term) {
    Json j = Json::array();
    for (const auto& e : term.entries()) {
        Json entry;
        entry["vertex"] = q.vertex_name(e.vertex);
        entry["degree"] = e.degree;
        entry["mult"] = e.multiplicity;
        j.push_back(std::move(entry));
    }
    return j;
}

}  // namespace qrep::detail

namespace qrep {

Representation representation_from_json(const std::string& text, const std::string& source_name,
                                        std::shared_ptr<const Quiver> context) {
    return detail::rep_from_json(detail::parse_document(text, source_name), source_name,
                                 std::move(context));
}

std::string representation_to_json(const Representation& m) {
    return detail::rep_to_json(m).dump(2);
}

std::string morphism_to_json(const RepMorphism& f) {
    return detail::morphism_to_json_full(f).dump(2);
}

RingProfile RingProfile::from_json(const std::string& text, const std::string& source_name) {
    return detail::profile_from_json(detail::parse_document(text, source_name), source_name);
}

RingProfile RingProfile::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open profile file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str(), path);
}

std::string RingProfile::to_json() const {
    return detail::profile_to_json(*this).dump(2);
}

std::string formal_injective_to_json(const Quiver& q, const FormalInjective& term) {
    return detail::formal_to_json(q, term).dump(2);
}

}  // namespace qrep
