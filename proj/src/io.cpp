#include "syzex/io.hpp"

#include <cstdio>
#include <fstream>

#include "syzex/error.hpp"

namespace syzex {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw SyzexError(ErrorCode::InvalidSpec, what);
}

const Json& member(const Json& j, const char* key, const std::string& ctx)
{
    if (!j.is_object() || !j.contains(key))
        bad(ctx + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string as_string(const Json& j, const std::string& ctx)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<std::int64_t>());
    bad(ctx + ": expected a string");
}

std::int64_t as_int(const Json& j, const std::string& ctx)
{
    if (!j.is_number_integer())
        bad(ctx + ": expected an integer");
    return j.get<std::int64_t>();
}

} // namespace

AlgebraSpec algebra_spec_from_json(const Json& j)
{
    AlgebraSpec s;
    if (!j.is_object())
        bad("algebra spec must be a JSON object");
    const auto field = as_int(member(j, "field", "algebra spec"), "field");
    if (field < 2 || field >= (1 << 16))
        bad("field must be a prime below 65536");
    s.field = static_cast<std::uint32_t>(field);
    const auto& verts = member(j, "vertices", "algebra spec");
    if (!verts.is_array())
        bad("vertices must be an array");
    for (const auto& v : verts)
        s.vertices.push_back(as_string(v, "vertex label"));
    if (j.contains("arrows")) {
        const auto& arrows = j.at("arrows");
        if (!arrows.is_array())
            bad("arrows must be an array");
        for (const auto& a : arrows)
            s.arrows.push_back({as_string(member(a, "name", "arrow"), "arrow name"), as_string(member(a, "from", "arrow"), "arrow source"),
                                as_string(member(a, "to", "arrow"), "arrow target")});
    }
    if (j.contains("relations")) {
        const auto& rels = j.at("relations");
        if (!rels.is_array())
            bad("relations must be an array");
        for (const auto& r : rels) {
            if (!r.is_array())
                bad("a relation must be an array of terms");
            std::vector<AlgebraSpec::TermSpec> terms;
            for (const auto& t : r) {
                AlgebraSpec::TermSpec ts;
                ts.coeff = t.contains("coeff") ? as_int(t.at("coeff"), "coeff") : 1;
                const auto& path = member(t, "path", "relation term");
                if (!path.is_array())
                    bad("path must be an array of arrow names");
                for (const auto& p : path)
                    ts.path.push_back(as_string(p, "path entry"));
                terms.push_back(std::move(ts));
            }
            s.relations.push_back(std::move(terms));
        }
    }
    if (j.contains("comment"))
        s.comment = as_string(j.at("comment"), "comment");
    return s;
}

Json to_json(const AlgebraSpec& spec)
{
    Json j;
    j["field"] = spec.field;
    j["vertices"] = spec.vertices;
    Json arrows = Json::array();
    for (const auto& a : spec.arrows)
        arrows.push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}});
    j["arrows"] = arrows;
    Json rels = Json::array();
    for (const auto& r : spec.relations) {
        Json terms = Json::array();
        for (const auto& t : r)
            terms.push_back({{"coeff", t.coeff}, {"path", t.path}});
        rels.push_back(terms);
    }
    j["relations"] = rels;
    if (!spec.comment.empty())
        j["comment"] = spec.comment;
    return j;
}

std::string dump_spec(const AlgebraSpec& spec)
{
    return to_json(spec).dump(2) + "\n";
}

Representation module_from_json(const Json& j, const AlgebraPtr& a)
{
    const auto& q = a->quiver();
    const Field f = a->field();
    Representation m{a, DimensionVector(q.vertex_count(), 0), {}};
    const auto& dim = member(j, "dim", "module");
    if (!dim.is_object())
        bad("module dim must be an object keyed by vertex label");
    for (const auto& [label, d] : dim.items()) {
        auto v = q.vertex_index(label);
        if (!v)
            bad("module dim names unknown vertex '" + label + "'");
        const auto n = as_int(d, "dimension");
        if (n < 0)
            bad("negative dimension at vertex '" + label + "'");
        m.dims[*v] = static_cast<int>(n);
    }
    Json action = j.contains("action") ? j.at("action") : Json::object();
    if (!action.is_object())
        bad("module action must be an object keyed by arrow name");
    for (const auto& [name, mat] : action.items())
        if (!q.arrow_index(name))
            bad("module action names unknown arrow '" + name + "'");
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& ar = q.arrow(ai);
        const int rows = m.dims[ar.target], cols = m.dims[ar.source];
        Matrix mat(f, rows, cols);
        if (action.contains(ar.name)) {
            const auto& rj = action.at(ar.name);
            if (!rj.is_array() || static_cast<int>(rj.size()) != rows)
                throw SyzexError(ErrorCode::InvalidModule, "arrow " + ar.name + ": expected " + std::to_string(rows) + " rows");
            for (int r = 0; r < rows; ++r) {
                const auto& row = rj.at(r);
                if (!row.is_array() || static_cast<int>(row.size()) != cols)
                    throw SyzexError(ErrorCode::InvalidModule, "arrow " + ar.name + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
                for (int c = 0; c < cols; ++c)
                    mat(r, c) = f.reduce(as_int(row.at(c), "matrix entry"));
            }
        }
        m.action.push_back(std::move(mat));
    }
    return m;
}

Json module_to_json(const Representation& m, const std::string& algebra_ref)
{
    const auto& q = m.algebra->quiver();
    Json j;
    j["algebra"] = algebra_ref;
    Json dim = Json::object();
    for (int v = 0; v < q.vertex_count(); ++v)
        dim[q.label(v)] = m.dims[v];
    j["dim"] = dim;
    Json action = Json::object();
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& mat = m.action[ai];
        Json rows = Json::array();
        for (int r = 0; r < mat.rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < mat.cols(); ++c)
                row.push_back(mat(r, c));
            rows.push_back(row);
        }
        action[q.arrow(ai).name] = rows;
    }
    j["action"] = action;
    return j;
}

std::vector<ExternalFact> facts_from_json(const Json& j)
{
    if (!j.is_array())
        bad("facts file must be a JSON array");
    std::vector<ExternalFact> out;
    for (const auto& e : j) {
        ExternalFact f;
        const auto& subj = member(e, "subject", "fact");
        f.algebra = as_string(member(subj, "algebra", "fact subject"), "fact algebra");
        f.i = static_cast<int>(as_int(member(subj, "i", "fact subject"), "fact index"));
        f.kind = as_string(member(e, "kind", "fact"), "fact kind");
        if (f.kind != "exact" && f.kind != "lower" && f.kind != "upper")
            bad("fact kind must be exact, lower or upper");
        f.value = static_cast<int>(as_int(member(e, "value", "fact"), "fact value"));
        if (f.i < 0 || f.value < 0)
            bad("fact index and value must be nonnegative");
        f.citation = e.contains("citation") ? as_string(e.at("citation"), "citation") : "";
        out.push_back(std::move(f));
    }
    return out;
}

Json to_json(const ExternalFact& f)
{
    return {{"subject", {{"algebra", f.algebra}, {"i", f.i}}}, {"kind", f.kind}, {"value", f.value}, {"citation", f.citation}};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string fnv1a_hex(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace syzex
