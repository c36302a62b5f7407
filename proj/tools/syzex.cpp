#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syzex/corpus.hpp"
#include "syzex/error.hpp"
#include "syzex/extdim.hpp"
#include "syzex/homology.hpp"
#include "syzex/io.hpp"

using namespace syzex;

namespace {

constexpr std::uint64_t default_budget = 1u << 20;

struct Context {
    std::string format = "text";
    std::optional<std::uint32_t> field;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget_flag;
    bool timings = false;
    std::string command;

    std::uint64_t budget = default_budget;
    std::string digest_input;
    Json results = Json::object();
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, double>> timing;
    std::ostringstream text;
    int exit_code = 0;
};

struct Loaded {
    std::string id;
    AlgebraSpec spec;
    AlgebraPtr algebra;
    std::map<std::string, std::string> named;
    std::vector<std::string> notes;
};

class Stopwatch {
public:
    Stopwatch(Context& ctx, std::string label) : ctx_(ctx), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
    ~Stopwatch()
    {
        ctx_.timing.emplace_back(label_, std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count());
    }

private:
    Context& ctx_;
    std::string label_;
    std::chrono::steady_clock::time_point start_;
};

Loaded load_algebra(Context& ctx, const std::string& arg)
{
    Loaded l;
    if (is_corpus_id(arg)) {
        auto e = load_corpus(arg);
        l.id = arg;
        l.spec = e.spec;
        l.named = e.modules;
        l.notes = e.notes;
    } else {
        l.spec = algebra_spec_from_json(read_json_file(arg));
        l.id = std::filesystem::path(arg).stem().string();
    }
    if (ctx.field)
        l.spec.field = *ctx.field;
    ctx.digest_input += dump_spec(l.spec);
    Stopwatch sw(ctx, "build_algebra");
    l.algebra = build_algebra(l.spec);
    return l;
}

Representation load_module(Context& ctx, const Loaded& l, const std::string& arg)
{
    if (std::filesystem::is_regular_file(arg)) {
        const auto j = read_json_file(arg);
        ctx.digest_input += j.dump();
        if (j.contains("algebra") && j.at("algebra").is_string() && j.at("algebra").get<std::string>() != l.id)
            ctx.warnings.push_back("module file names algebra '" + j.at("algebra").get<std::string>() + "', loaded '" + l.id + "'");
        return module_from_json(j, l.algebra);
    }
    ctx.digest_input += "module:" + arg + "\n";
    return parse_module_expression(l.algebra, arg, l.named);
}

std::vector<Representation> load_module_list(Context& ctx, const Loaded& l, const std::string& arg)
{
    std::vector<Representation> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(load_module(ctx, l, item));
    return out;
}

std::string dims_text(const Representation& m)
{
    std::string s = "(";
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        s += (v ? "," : "") + std::to_string(m.dims[v]);
    return s + ")";
}

Json dims_json(const Representation& m)
{
    Json j = Json::object();
    const auto& q = m.algebra->quiver();
    for (int v = 0; v < q.vertex_count(); ++v)
        j[q.label(v)] = m.dims[v];
    return j;
}

Json member_json(const Representation& m, const std::string& id)
{
    return {{"dim", m.total_dim()}, {"dims", dims_json(m)}, {"projective", is_projective(m)}, {"module", module_to_json(m, id)}};
}

Json bounded_json(const Bounded& b)
{
    return {{"value", b.value ? Json(*b.value) : Json(nullptr)}, {"bound", b.bound}};
}

void list_members(Context& ctx, const Loaded& l, const AddCat& c, const char* key)
{
    Json arr = Json::array();
    for (const auto& m : c.members()) {
        arr.push_back(member_json(m, l.id));
        ctx.text << "  " << dims_text(m) << "  dim " << m.total_dim() << (is_projective(m) ? "  projective" : "") << "\n";
    }
    ctx.results[key] = arr;
}

UniverseOptions universe_options(const Context& ctx, int d, int mult)
{
    UniverseOptions o;
    o.dim_bound = d;
    o.mult_bound = mult;
    o.class_budget = ctx.budget;
    return o;
}

Json universe_json(const Universe& u)
{
    Json sat = Json::object();
    for (const auto& [k, v] : u.saturated)
        sat[k] = v;
    return {{"dim_bound", u.dim_bound}, {"mult_bound", u.mult_bound}, {"members", u.members.size()}, {"discarded", u.discarded},
            {"rounds", u.rounds}, {"saturated", sat}};
}

void note_universe(Context& ctx, const Universe& u)
{
    ctx.results["universe"] = universe_json(u);
    ctx.text << "universe: " << u.members.size() << " members at dim <= " << u.dim_bound << ", mult bound " << u.mult_bound << ", "
             << u.discarded << " discarded" << (u.fully_saturated() ? ", saturated" : ", not saturated") << "\n";
    if (!u.fully_saturated())
        ctx.warnings.push_back("universe not saturated");
    if (u.discarded > 0)
        ctx.warnings.push_back("universe clipped: " + std::to_string(u.discarded) + " candidates above dimension " + std::to_string(u.dim_bound));
}

AddCat to_universe(const Universe& u, const std::vector<Representation>& modules)
{
    AddCat c(u.algebra);
    for (const auto& m : modules)
        for (const auto& s : summands(m)) {
            auto idx = u.members.find(s);
            c.insert(idx ? u.members[*idx] : s);
        }
    return c;
}

// ---------------------------------------------------------------- commands

void cmd_algebra_info(Context& ctx, const std::string& spec)
{
    auto l = load_algebra(ctx, spec);
    const auto& a = *l.algebra;
    const auto& q = a.quiver();
    const auto g = gldim_bounded(l.algebra, default_dimension_bound(a));
    const auto tits = tits_classification(a);
    Json proj = Json::object(), inj = Json::object();
    for (int v = 0; v < q.vertex_count(); ++v) {
        proj[q.label(v)] = dims_json(projective(l.algebra, v));
        inj[q.label(v)] = dims_json(injective(l.algebra, v));
    }
    ctx.results = {{"algebra", l.id},
                   {"field", a.field().characteristic()},
                   {"vertices", q.vertex_count()},
                   {"arrows", q.arrow_count()},
                   {"relations", a.relations().size()},
                   {"dimension", a.dim()},
                   {"loewy_length", a.nil_degree()},
                   {"gldim", bounded_json(g)},
                   {"tits", to_string(tits)},
                   {"fingerprint", fnv1a_hex(a.fingerprint())},
                   {"projectives", proj},
                   {"injectives", inj},
                   {"notes", l.notes}};
    ctx.text << "algebra " << l.id << " over GF(" << a.field().characteristic() << ")\n"
             << "  vertices " << q.vertex_count() << ", arrows " << q.arrow_count() << ", relations " << a.relations().size() << "\n"
             << "  dimension " << a.dim() << ", Loewy length " << a.nil_degree() << ", gldim " << g.str() << ", tits " << to_string(tits) << "\n";
    for (int v = 0; v < q.vertex_count(); ++v)
        ctx.text << "  P(" << q.label(v) << ") " << dims_text(projective(l.algebra, v)) << "  I(" << q.label(v) << ") " << dims_text(injective(l.algebra, v)) << "\n";
    for (const auto& n : l.notes)
        ctx.text << "  note: " << n << "\n";
}

void cmd_mod_validate(Context& ctx, const std::string& spec, const std::string& mod)
{
    auto l = load_algebra(ctx, spec);
    auto m = load_module(ctx, l, mod);
    const auto v = validate(m);
    ctx.results = {{"valid", v.empty()}, {"violations", v}, {"dims", dims_json(m)}};
    if (v.empty()) {
        ctx.text << "valid module " << dims_text(m) << "\n";
    } else {
        ctx.text << "invalid module:\n";
        for (const auto& s : v)
            ctx.text << "  " << s << "\n";
        ctx.exit_code = 2;
    }
}

void cmd_mod_decompose(Context& ctx, const std::string& spec, const std::string& mod)
{
    auto l = load_algebra(ctx, spec);
    auto m = load_module(ctx, l, mod);
    DecomposeOptions opt;
    opt.seed = ctx.seed;
    const auto d = [&] {
        Stopwatch sw(ctx, "decompose");
        return decompose(m, opt);
    }();
    auto factors = d.factors;
    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
    Json arr = Json::array();
    ctx.text << "module " << dims_text(m) << ": " << d.factor_count() << " indecomposable summand" << (d.factor_count() == 1 ? "" : "s")
             << (d.certified ? "" : " (locality not certified)") << "\n";
    for (const auto& [f, mult] : factors) {
        auto j = member_json(f, l.id);
        j["multiplicity"] = mult;
        arr.push_back(j);
        ctx.text << "  " << dims_text(f) << (mult > 1 ? " ^" + std::to_string(mult) : "") << (is_projective(f) ? "  projective" : "") << "\n";
    }
    ctx.results = {{"dims", dims_json(m)}, {"certified", d.certified}, {"summands", arr}};
    if (!d.certified)
        ctx.warnings.push_back("a summand's endomorphism ring was not certified local; iso answers may be unknown");
}

void cmd_mod_syzygy(Context& ctx, const std::string& spec, const std::string& mod, int n, bool co)
{
    auto l = load_algebra(ctx, spec);
    auto m = load_module(ctx, l, mod);
    const auto r = co ? cosyzygy(m, n) : syzygy(m, n);
    const auto j = module_to_json(r, l.id);
    ctx.results = {{"n", n}, {"dims", dims_json(r)}, {"module", j}};
    ctx.text << j.dump(2) << "\n";
}

void cmd_ext(Context& ctx, const std::string& spec, const std::string& xs, const std::string& ys, bool enumerate)
{
    auto l = load_algebra(ctx, spec);
    auto x = load_module(ctx, l, xs);
    auto y = load_module(ctx, l, ys);
    const auto e = ext1_space(x, y);
    const auto p = l.algebra->field().characteristic();
    ctx.results = {{"dimension", e.dimension}, {"field", p}};
    ctx.text << "dim Ext^1(" << xs << ", " << ys << ") = " << e.dimension << " over GF(" << p << ")\n";
    if (!enumerate)
        return;
    const auto classes = enumerate_ext_classes(e, ctx.budget);
    Json arr = Json::array();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        Vec coeffs(e.dimension);
        std::size_t rest = c;
        for (int k = 0; k < e.dimension; ++k) {
            coeffs[k] = static_cast<Scalar>(rest % p);
            rest /= p;
        }
        const auto ext = extension_middle(classes[c]);
        auto parts = summands(ext.middle);
        Json sj = Json::array();
        std::string st;
        for (const auto& s : parts) {
            sj.push_back(dims_json(s));
            st += (st.empty() ? "" : " + ") + dims_text(s);
        }
        const bool exact = is_short_exact(ext, y, x);
        arr.push_back({{"coefficients", coeffs}, {"middle", dims_json(ext.middle)}, {"summands", sj}, {"exact", exact}});
        ctx.text << "  class [";
        for (int k = 0; k < e.dimension; ++k)
            ctx.text << (k ? " " : "") << coeffs[k];
        ctx.text << "]: middle " << dims_text(ext.middle) << " = " << (st.empty() ? "0" : st) << (exact ? "" : "  NOT EXACT") << "\n";
    }
    ctx.results["classes"] = arr;
}

void cmd_bullet(Context& ctx, const std::string& spec, const std::string& left, const std::string& right, int d, int mult)
{
    auto l = load_algebra(ctx, spec);
    const auto u = [&] {
        Stopwatch sw(ctx, "universe");
        return generate_universe(l.algebra, universe_options(ctx, d, mult));
    }();
    note_universe(ctx, u);
    const auto s1 = to_universe(u, load_module_list(ctx, l, left));
    const auto s2 = to_universe(u, load_module_list(ctx, l, right));
    BulletOptions bo;
    bo.mult_bound = mult;
    bo.class_budget = ctx.budget;
    const auto b = [&] {
        Stopwatch sw(ctx, "bullet");
        return bullet(u, s1, s2, bo).sorted();
    }();
    ctx.text << "bullet(" << left << " | " << right << "): " << b.size() << " indecomposables\n";
    list_members(ctx, l, b, "members");
    int missing = 0;
    for (const auto& m : u.members.members())
        if (!b.find(m))
            ++missing;
    ctx.results["universe_members_missing"] = missing;
    ctx.text << "universe members not in the result: " << missing << "\n";
}

void cmd_layer(Context& ctx, const std::string& spec, const std::string& gen, int n, int d, int mult)
{
    auto l = load_algebra(ctx, spec);
    const auto u = [&] {
        Stopwatch sw(ctx, "universe");
        return generate_universe(l.algebra, universe_options(ctx, d, mult));
    }();
    note_universe(ctx, u);
    const auto t = to_universe(u, load_module_list(ctx, l, gen));
    BulletOptions bo;
    bo.mult_bound = mult;
    bo.class_budget = ctx.budget;
    const auto layer_cat = [&] {
        Stopwatch sw(ctx, "layer");
        return layer(u, t, n, bo).sorted();
    }();
    int missing = 0;
    for (const auto& m : u.members.members())
        if (!layer_cat.find(m))
            ++missing;
    ctx.results["n"] = n;
    ctx.results["universe_members_missing"] = missing;
    ctx.text << "[" << gen << "]_" << n << ": " << layer_cat.size() << " indecomposables, " << missing << " universe members missing\n";
    list_members(ctx, l, layer_cat, "members");
}

void cmd_syzcat(Context& ctx, const std::string& spec, int n, int d, int mult)
{
    auto l = load_algebra(ctx, spec);
    const auto u = [&] {
        Stopwatch sw(ctx, "universe");
        return generate_universe(l.algebra, universe_options(ctx, d, mult));
    }();
    note_universe(ctx, u);
    const auto c = syzygy_category(u, n);
    ctx.results["n"] = n;
    ctx.text << "Omega^" << n << " category: " << c.size() << " indecomposables\n";
    list_members(ctx, l, c, "members");
    if (n >= 1 && d > 2) {
        const auto smaller = generate_universe(l.algebra, universe_options(ctx, d - 2, mult));
        const auto cert = syzygy_finite_certificate(u, smaller, n);
        ctx.results["finite_certificate"] = {{"holds", cert.holds}, {"notes", cert.notes}};
        ctx.text << "finite certificate: " << (cert.holds ? "holds" : "fails") << "\n";
        for (const auto& s : cert.notes)
            ctx.text << "  " << s << "\n";
    }
}

Json interval_bound_json(const EdBound& b)
{
    return {{"value", b.value}, {"rule", b.rule}, {"citation", b.citation}, {"premises", b.premises}};
}

Json rep_type_json(const RepTypeCertificate& r, const std::string& id)
{
    Json members = Json::array();
    for (const auto& m : r.members)
        members.push_back(member_json(m, id));
    return {{"verdict", to_string(r.verdict)}, {"method", to_string(r.method)}, {"certified", r.certified},
            {"witness", r.witness},        {"dim_bound", r.dim_bound},        {"member_count", r.members.size()},
            {"members", members},          {"notes", r.notes}};
}

void print_rep_type(Context& ctx, const RepTypeCertificate& r)
{
    ctx.text << "representation type: " << to_string(r.verdict) << " [" << to_string(r.method) << (r.certified ? ", certified" : ", not certified") << "]\n";
    if (!r.witness.empty())
        ctx.text << "  " << r.witness << "\n";
    for (const auto& n : r.notes)
        ctx.text << "  " << n << "\n";
    if (r.method == RepTypeCertificate::Method::HeuristicCount)
        ctx.warnings.push_back("heuristic infinite-type flag: " + r.witness);
}

void cmd_ed(Context& ctx, const std::string& spec, const std::vector<int>& indices, int d, int mult, const std::string& facts_file)
{
    auto l = load_algebra(ctx, spec);
    EdOptions opt;
    opt.indices = indices.empty() ? std::vector<int>{0} : indices;
    opt.algebra_id = l.id;
    opt.dim_bound = d;
    opt.mult_bound = mult;
    if (!facts_file.empty()) {
        const auto j = read_json_file(facts_file);
        ctx.digest_input += j.dump();
        opt.facts = facts_from_json(j);
    }
    const auto r = [&] {
        Stopwatch sw(ctx, "ed_report");
        return ed_report(l.algebra, opt);
    }();
    Json intervals = Json::array();
    ctx.text << "ed " << l.id << " (dim bound " << d << ", mult bound " << mult << ")\n"
             << "Loewy length " << r.loewy_length << ", gldim " << r.gldim.str() << ", tits " << to_string(r.tits) << "\n";
    print_rep_type(ctx, r.rep_type);
    if (r.syzygy_finite_from)
        ctx.text << "syzygy-finite certificate from n = " << *r.syzygy_finite_from << "\n";
    for (const auto& iv : r.intervals) {
        intervals.push_back({{"i", iv.i}, {"exact", iv.exact()}, {"lower", interval_bound_json(iv.lower)}, {"upper", interval_bound_json(iv.upper)}});
        ctx.text << "i=" << iv.i << ": ";
        if (iv.exact())
            ctx.text << "exact " << iv.lower.value << "\n";
        else
            ctx.text << "[" << iv.lower.value << ", " << iv.upper.value << "]\n";
        for (const auto* b : {&iv.lower, &iv.upper}) {
            ctx.text << "  " << (b == &iv.lower ? "lower " : "upper ") << b->value << " [" << b->rule << "]";
            if (!b->citation.empty())
                ctx.text << " " << b->citation;
            ctx.text << "\n";
            for (const auto& p : b->premises)
                ctx.text << "    from " << p << "\n";
        }
    }
    for (const auto& n : r.notes)
        ctx.text << "note: " << n << "\n";
    for (const auto& n : l.notes)
        ctx.text << "note: " << n << "\n";
    ctx.warnings.insert(ctx.warnings.end(), r.warnings.begin(), r.warnings.end());
    ctx.results = {{"algebra", l.id},
                   {"dim_bound", d},
                   {"mult_bound", mult},
                   {"loewy_length", r.loewy_length},
                   {"gldim", bounded_json(r.gldim)},
                   {"tits", to_string(r.tits)},
                   {"rep_type", rep_type_json(r.rep_type, l.id)},
                   {"syzygy_finite_from", r.syzygy_finite_from ? Json(*r.syzygy_finite_from) : Json(nullptr)},
                   {"universe", {{"members", r.universe_members}, {"discarded", r.universe_discarded}, {"saturated", r.universe_saturated}}},
                   {"intervals", intervals},
                   {"notes", r.notes}};
}

void cmd_tilting(Context& ctx, const std::string& spec, const std::string& mod)
{
    auto l = load_algebra(ctx, spec);
    auto t = load_module(ctx, l, mod);
    const auto v = [&] {
        Stopwatch sw(ctx, "tilting");
        return tilting_check(t, default_dimension_bound(*l.algebra));
    }();
    ctx.results = {{"is_tilting", v.is_tilting}, {"pd", bounded_json(v.pd)}, {"failed_condition", v.failed_condition}, {"failures", v.failures}};
    ctx.text << (v.is_tilting ? "tilting" : "not tilting") << ", pd " << v.pd.str() << "\n";
    for (const auto& f : v.failures)
        ctx.text << "  condition " << v.failed_condition << ": " << f << "\n";
}

void cmd_reptype(Context& ctx, const std::string& spec, int d, int mult)
{
    auto l = load_algebra(ctx, spec);
    RepTypeCertificate r;
    if (!l.algebra->has_relations()) {
        r = rep_type_certificate(l.algebra, d);
    } else {
        auto o = universe_options(ctx, d, mult);
        o.stop_at_cap = true;
        const auto u = [&] {
            Stopwatch sw(ctx, "universe");
            return generate_universe(l.algebra, o);
        }();
        note_universe(ctx, u);
        r = rep_type_certificate(u);
    }
    print_rep_type(ctx, r);
    for (const auto& m : r.members)
        ctx.text << "  " << dims_text(m) << "\n";
    ctx.results["rep_type"] = rep_type_json(r, l.id);
}

void cmd_corpus_list(Context& ctx)
{
    Json arr = Json::array();
    for (const auto& id : corpus_ids()) {
        const auto e = load_corpus(id);
        arr.push_back({{"id", id}, {"title", e.title}, {"heavy", e.heavy}});
        ctx.text << id << "  " << e.title << (e.heavy ? "  (heavy)" : "") << "\n";
    }
    ctx.results["entries"] = arr;
}

void cmd_corpus_show(Context& ctx, const std::string& id, bool spec_only)
{
    const auto e = load_corpus(id);
    auto spec = e.spec;
    if (ctx.field)
        spec.field = *ctx.field;
    if (spec_only) {
        ctx.text << dump_spec(spec);
    } else {
        ctx.text << "# " << e.id << ": " << e.title << "\n";
        for (const auto& [name, expr] : e.modules)
            ctx.text << "# module " << name << " = " << expr << "\n";
        for (const auto& n : e.notes)
            ctx.text << "# note: " << n << "\n";
        ctx.text << dump_spec(spec);
    }
    Json mods = Json::object();
    for (const auto& [name, expr] : e.modules)
        mods[name] = expr;
    ctx.results = {{"id", e.id}, {"title", e.title}, {"heavy", e.heavy}, {"spec", to_json(spec)}, {"modules", mods}, {"notes", e.notes}};
}

void emit(Context& ctx)
{
    if (ctx.format == "json") {
        Json report;
        report["command"] = ctx.command;
        report["inputs_digest"] = fnv1a_hex(ctx.command + "\n" + ctx.digest_input);
        report["results"] = ctx.results;
        report["warnings"] = ctx.warnings;
        if (ctx.timings) {
            Json t = Json::object();
            for (const auto& [k, v] : ctx.timing)
                t[k] = v;
            report["timings"] = t;
        }
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << ctx.text.str();
    for (const auto& w : ctx.warnings)
        std::cout << "warning: " << w << "\n";
    if (ctx.timings)
        for (const auto& [k, v] : ctx.timing)
            std::cout << "time " << k << ": " << v << " s\n";
}

void report_error(const Context& ctx, const std::string& code, const std::string& what, const std::vector<std::string>& details)
{
    if (ctx.format == "json") {
        Json report;
        report["command"] = ctx.command;
        report["error"] = {{"code", code}, {"message", what}, {"details", details}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cerr << "error: " << what << "\n";
        for (const auto& d : details)
            std::cerr << "  " << d << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    Context ctx;
    for (int i = 1; i < argc; ++i)
        ctx.command += (i > 1 ? " " : "") + std::string(argv[i]);

    CLI::App app{"syzex: extension dimensions of syzygy categories over finite-dimensional algebras"};
    app.require_subcommand(1);
    std::uint32_t field = 0;
    app.add_option("--field", field, "Override the field characteristic");
    app.add_option("--format", ctx.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", ctx.seed, "Seed for randomized fallbacks");
    std::uint64_t budget = 0;
    app.add_option("--budget", budget, "Class enumeration budget");
    app.add_flag("--timings", ctx.timings, "Include wall-clock timings");

    std::string spec, mod, mod2, left, right, gen, facts;
    int n = 1, d = 6, mult = 2;
    bool enumerate = false, spec_only = false;
    std::vector<int> indices;

    auto* algebra = app.add_subcommand("algebra", "Algebra commands")->require_subcommand(1);
    auto* info = algebra->add_subcommand("info", "Dimension, Loewy length, gldim, projectives");
    info->add_option("spec", spec, "Corpus id or algebra JSON file")->required();

    auto* modc = app.add_subcommand("mod", "Module commands")->require_subcommand(1);
    auto* validate_c = modc->add_subcommand("validate", "Check relations and shapes");
    auto* decompose_c = modc->add_subcommand("decompose", "Indecomposable summands");
    auto* syzygy_c = modc->add_subcommand("syzygy", "n-th syzygy");
    auto* cosyzygy_c = modc->add_subcommand("cosyzygy", "n-th cosyzygy");
    for (auto* s : {validate_c, decompose_c, syzygy_c, cosyzygy_c}) {
        s->add_option("spec", spec, "Corpus id or algebra JSON file")->required();
        s->add_option("module", mod, "Module JSON file or expression such as S0+P1")->required();
    }
    syzygy_c->add_option("--n", n, "Number of steps")->check(CLI::NonNegativeNumber);
    cosyzygy_c->add_option("--n", n, "Number of steps")->check(CLI::NonNegativeNumber);

    auto* ext = app.add_subcommand("ext", "Ext^1(X, Y)");
    ext->add_option("spec", spec)->required();
    ext->add_option("X", mod)->required();
    ext->add_option("Y", mod2)->required();
    ext->add_flag("--enumerate", enumerate, "List every class with its middle term");

    auto* bullet_c = app.add_subcommand("bullet", "Middle terms of extensions of right-side sums by left-side sums");
    bullet_c->add_option("spec", spec)->required();
    bullet_c->add_option("--left", left, "Comma-separated modules for the sub side")->required();
    bullet_c->add_option("--right", right, "Comma-separated modules for the quotient side")->required();

    auto* layer_c = app.add_subcommand("layer", "Extension layer [T]_n");
    layer_c->add_option("spec", spec)->required();
    layer_c->add_option("--gen", gen, "Comma-separated generators")->required();
    layer_c->add_option("--n", n, "Layer index")->check(CLI::PositiveNumber);

    auto* syzcat = app.add_subcommand("syzcat", "Syzygy category at bounded dimension");
    syzcat->add_option("spec", spec)->required();
    syzcat->add_option("--n", n, "Syzygy index")->check(CLI::NonNegativeNumber);

    auto* ed = app.add_subcommand("ed", "Bounds on ed of the syzygy categories");
    ed->add_option("spec", spec)->required();
    ed->add_option("--i", indices, "Comma-separated syzygy indices")->delimiter(',');
    ed->add_option("--facts", facts, "External facts JSON file");

    auto* tilting = app.add_subcommand("tilting", "Tilting module check");
    tilting->add_option("spec", spec)->required();
    tilting->add_option("module", mod)->required();

    auto* reptype = app.add_subcommand("reptype", "Representation type certificate");
    reptype->add_option("spec", spec)->required();

    for (auto* s : {bullet_c, layer_c, syzcat, ed, reptype}) {
        s->add_option("--dim-bound", d, "Universe dimension bound")->check(CLI::PositiveNumber);
        s->add_option("--mult-bound", mult, "Multiplicity bound on the sub side")->check(CLI::PositiveNumber);
    }

    auto* corpus = app.add_subcommand("corpus", "Packaged example algebras")->require_subcommand(1);
    auto* clist = corpus->add_subcommand("list", "List corpus ids");
    auto* cshow = corpus->add_subcommand("show", "Print a corpus entry");
    cshow->add_option("id", spec)->required();
    cshow->add_flag("--spec-only", spec_only, "Print only the algebra JSON");

    for (auto* s : {algebra, info, modc, validate_c, decompose_c, syzygy_c, cosyzygy_c, ext, bullet_c, layer_c, syzcat, ed, tilting, reptype, corpus, clist, cshow})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.get_option("--field")->count() > 0)
        ctx.field = field;
    if (app.get_option("--budget")->count() > 0) {
        ctx.budget = budget;
    } else if (const char* env = std::getenv("SYZEX_BUDGET")) {
        try {
            ctx.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: SYZEX_BUDGET must be a nonnegative integer\n";
            return 2;
        }
    }
    ctx.digest_input += "budget:" + std::to_string(ctx.budget) + " seed:" + std::to_string(ctx.seed) + "\n";

    try {
        if (*info)
            cmd_algebra_info(ctx, spec);
        else if (*validate_c)
            cmd_mod_validate(ctx, spec, mod);
        else if (*decompose_c)
            cmd_mod_decompose(ctx, spec, mod);
        else if (*syzygy_c)
            cmd_mod_syzygy(ctx, spec, mod, n, false);
        else if (*cosyzygy_c)
            cmd_mod_syzygy(ctx, spec, mod, n, true);
        else if (*ext)
            cmd_ext(ctx, spec, mod, mod2, enumerate);
        else if (*bullet_c)
            cmd_bullet(ctx, spec, left, right, d, mult);
        else if (*layer_c)
            cmd_layer(ctx, spec, gen, n, d, mult);
        else if (*syzcat)
            cmd_syzcat(ctx, spec, n, d, mult);
        else if (*ed)
            cmd_ed(ctx, spec, indices, d, mult, facts);
        else if (*tilting)
            cmd_tilting(ctx, spec, mod);
        else if (*reptype)
            cmd_reptype(ctx, spec, d, mult);
        else if (*clist)
            cmd_corpus_list(ctx);
        else if (*cshow)
            cmd_corpus_show(ctx, spec, spec_only);
    } catch (const SyzexError& e) {
        report_error(ctx, to_string(e.code()), e.what(), e.details());
        return e.code() == ErrorCode::BudgetExceeded ? 1 : 2;
    } catch (const std::exception& e) {
        report_error(ctx, "Error", e.what(), {});
        return 2;
    }
    emit(ctx);
    return ctx.exit_code;
}
