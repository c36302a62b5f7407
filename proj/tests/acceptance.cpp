// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "properties.hpp"
#include "support.hpp"

using namespace syzex;
using namespace syzex::test;

namespace {

/// Vertices of the Auslander-Reiten quiver drawn for the five-vertex example.
constexpr int five_vertex_ar_quiver_vertices = 14;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (!ok)
                why << "; ";
            why << what;
            ok = false;
        }
    }
};

const EdInterval* at(const EdReport& r, int i)
{
    for (const auto& iv : r.intervals)
        if (iv.i == i)
            return &iv;
    return nullptr;
}

bool exact_value(const EdReport& r, int i, int v)
{
    const auto* iv = at(r, i);
    return iv && iv->exact() && iv->lower.value == v;
}

std::string interval_text(const EdReport& r, int i)
{
    const auto* iv = at(r, i);
    if (!iv)
        return "missing";
    return "[" + std::to_string(iv->lower.value) + "," + std::to_string(iv->upper.value) + "] " + iv->lower.rule + "/" + iv->upper.rule;
}

void criterion1(Check& c)
{
    EdOptions o;
    o.indices = {0, 1};
    const auto r = ed_report(corpus_algebra("kron2"), o);
    c.expect(exact_value(r, 0, 1), "i=0 " + interval_text(r, 0));
    c.expect(at(r, 0) && at(r, 0)->lower.rule == "R1" && at(r, 0)->upper.rule == "R3", "i=0 provenance " + interval_text(r, 0));
    c.expect(exact_value(r, 1, 0) && at(r, 1)->upper.rule == "R7", "i=1 " + interval_text(r, 1));
}

void criterion2(Check& c)
{
    UniverseOptions uo;
    uo.dim_bound = 6;
    uo.mult_bound = 3;
    const auto u = generate_universe(corpus_algebra("kron2"), uo);
    AddCat s0(u.algebra), s1(u.algebra);
    s0.insert(simple(u.algebra, 0));
    s1.insert(simple(u.algebra, 1));
    BulletOptions bo;
    bo.mult_bound = 3;
    const auto cd = bullet(u, s1, s0, bo);
    int missing = 0;
    for (const auto& m : u.members.members())
        missing += !cd.find(m).has_value();
    c.expect(missing == 0, std::to_string(missing) + " of " + std::to_string(u.members.size()) + " members missing from S(1) * S(0)");
    const auto dc = bullet(u, s0, s1, bo);
    c.expect(dc.same_members(merge(s0, s1)), "S(0) * S(1) has " + std::to_string(dc.size()) + " members");
}

void criterion3(Check& c)
{
    const auto a = corpus_algebra("fivevertex");
    const auto cert = rep_type_certificate(a, 8);
    c.expect(cert.verdict == RepTypeCertificate::Verdict::Finite && cert.certified, std::string("verdict ") + to_string(cert.verdict));
    c.expect(static_cast<int>(cert.members.size()) == five_vertex_ar_quiver_vertices,
             std::to_string(cert.members.size()) + " members, expected " + std::to_string(five_vertex_ar_quiver_vertices));
    EdOptions o;
    o.indices = {0, 1, 2, 3};
    o.dim_bound = 8;
    const auto r = ed_report(a, o);
    for (int i = 0; i <= 3; ++i)
        c.expect(exact_value(r, i, 0), "i=" + std::to_string(i) + " " + interval_text(r, i));
}

void criterion4(Check& c)
{
    const auto a = corpus_algebra("fivevertex");
    const auto t = parse_module_expression(a, load_corpus("fivevertex").modules.at("T"));
    const auto v = tilting_check(t, default_dimension_bound(*a));
    c.expect(v.is_tilting, "not tilting, condition " + std::to_string(v.failed_condition));
    c.expect(v.pd.value == 1, "pd " + v.pd.str());
}

void criterion5(Check& c)
{
    const auto a = corpus_algebra("euclideanB");
    c.expect(tits_classification(*a) == TitsClass::Euclidean, std::string("tits ") + to_string(tits_classification(*a)));
    EdOptions o;
    o.indices = {0, 1, 2, 3};
    const auto r = ed_report(a, o);
    c.expect(exact_value(r, 0, 1) && at(r, 0)->lower.rule == "R1" && at(r, 0)->upper.rule == "R3", "i=0 " + interval_text(r, 0));
    for (int i = 1; i <= 3; ++i)
        c.expect(exact_value(r, i, 0), "i=" + std::to_string(i) + " " + interval_text(r, i));
}

void criterion6(Check& c)
{
    const auto a = corpus_algebra("beilinson2");
    const auto g = gldim_bounded(a, default_dimension_bound(*a));
    c.expect(g.value == 2, "gldim " + g.str());
    EdOptions o;
    o.indices = {0, 1, 2};
    o.algebra_id = "beilinson2";
    const auto open = ed_report(a, o);
    const auto* i0 = at(open, 0);
    c.expect(i0 && i0->lower.value == 0 && i0->upper.value == 2, "without fact i=0 " + interval_text(open, 0));
    bool noted = false;
    for (const auto& n : open.notes)
        noted |= n.find("ed Omega^0 is only bounded: [0, 2]") != std::string::npos;
    c.expect(noted, "report does not state the certified interval [0, 2]");
    o.facts = {ExternalFact{"beilinson2", 0, "exact", 2, "ed of the Beilinson algebra equals n"}};
    const auto with = ed_report(a, o);
    for (int i = 0; i <= 2; ++i)
        c.expect(exact_value(with, i, 2 - i), "with fact i=" + std::to_string(i) + " " + interval_text(with, i));
}

void criterion7(Check& c)
{
    for (const auto& o : run_all_properties(20261016, 100)) {
        std::printf("    %-28s %4d instances  %3d failures  %7.1f s\n", o.name.c_str(), o.instances, o.failures, o.seconds);
        c.expect(o.ok() && o.instances >= 100, o.name + ": " + std::to_string(o.failures) + " failures, first: " + o.first_failure);
    }
}

void criterion8(Check& c)
{
    const auto a = corpus_algebra("nodeA");
    UniverseOptions uo;
    uo.dim_bound = 8;
    const auto u = generate_universe(a, uo);
    uo.dim_bound = 6;
    const auto smaller = generate_universe(a, uo);
    const auto cert = syzygy_finite_certificate(u, smaller, 1);
    c.expect(u.fully_saturated(), "universe at d=8 not saturated");
    c.expect(cert.holds, "syzygy category not certified finite");
    EdOptions o;
    o.indices = {1, 2, 3};
    o.dim_bound = 8;
    const auto r = ed_report(a, o);
    for (int i = 1; i <= 3; ++i) {
        const auto* iv = at(r, i);
        c.expect(iv && iv->upper.value == 0 && iv->upper.rule == "R8", "i=" + std::to_string(i) + " " + interval_text(r, i));
    }
}

}

int main()
{
    struct Criterion {
        int id;
        const char* title;
        double limit;
        std::function<void(Check&)> run;
    };
    const Criterion all[] = {
        {1, "Kronecker ed exact 1 at i=0, 0 at i>=1", 5, criterion1},
        {2, "Kronecker bullet orders at d=6", 30, criterion2},
        {3, "five-vertex finite type, ed 0", 60, criterion3},
        {4, "five-vertex tilting module, pd 1", 10, criterion4},
        {5, "Euclidean B: ed 1 then 0", 10, criterion5},
        {6, "Beilinson n=2 intervals", 300, criterion6},
        {7, "property suites", 600, criterion7},
        {8, "node example syzygy-finite at i>=1", 300, criterion8},
    };
    int failed = 0;
    for (const auto& cr : all) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(s < cr.limit, "took " + std::to_string(s) + " s, limit " + std::to_string(cr.limit) + " s");
        std::printf("%s criterion %d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title, s, c.ok ? "" : " -- ", c.why.str().c_str());
        std::fflush(stdout);
        failed += !c.ok;
    }
    return failed == 0 ? 0 : 1;
}
