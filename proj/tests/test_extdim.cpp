#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "syzex/error.hpp"
#include "syzex/kernels.hpp"

using namespace syzex;
using namespace syzex::test;

namespace {

AlgebraPtr linear_an(int n)
{
    AlgebraSpec s;
    for (int v = 0; v < n; ++v)
        s.vertices.push_back(std::to_string(v));
    for (int v = 0; v + 1 < n; ++v)
        s.arrows.push_back({"a" + std::to_string(v), std::to_string(v), std::to_string(v + 1)});
    return build_algebra(s);
}

AlgebraPtr kronecker(int arrows)
{
    AlgebraSpec s;
    s.vertices = {"0", "1"};
    for (int i = 0; i < arrows; ++i)
        s.arrows.push_back({"x" + std::to_string(i), "0", "1"});
    return build_algebra(s);
}

AlgebraPtr semisimple(int n)
{
    AlgebraSpec s;
    for (int v = 0; v < n; ++v)
        s.vertices.push_back(std::to_string(v));
    return build_algebra(s);
}

AddCat simples(const AlgebraPtr& a, std::initializer_list<int> vs)
{
    AddCat c(a);
    for (int v : vs)
        c.insert(simple(a, v));
    return c;
}

const Universe& kron6()
{
    return corpus_universe("kron2", 6, 3);
}

std::vector<std::string> serialized(const AddCat& c)
{
    std::vector<std::string> out;
    const auto sorted = c.sorted();
    for (const auto& m : sorted.members())
        out.push_back(serialize(m));
    return out;
}

const EdInterval& at(const std::vector<EdInterval>& v, int i)
{
    for (const auto& x : v)
        if (x.i == i)
            return x;
    throw std::out_of_range("index");
}

}

TEST(AddCat, DeduplicatesAndContains)
{
    const auto a = corpus_algebra("kron2");
    AddCat c(a);
    bool added = false;
    EXPECT_EQ(c.insert(simple(a, 0), &added), 0);
    EXPECT_TRUE(added);
    c.insert(simple(a, 0), &added);
    EXPECT_FALSE(added);
    c.insert(projective(a, 0));
    EXPECT_EQ(c.size(), 2);
    EXPECT_TRUE(c.contains(direct_sum(power(simple(a, 0), 3), projective(a, 0))));
    EXPECT_FALSE(c.contains(direct_sum(simple(a, 0), simple(a, 1))));
    EXPECT_EQ(c.max_member_dim(), 3);
    EXPECT_TRUE(make_addcat(a, {direct_sum(simple(a, 1), simple(a, 0))}).same_members(simples(a, {0, 1})));
}

TEST(Subspaces, CountsMatchGaussianBinomials)
{
    const Field f(2);
    for (int n = 0; n <= 4; ++n)
        for (int r = 0; r <= n; ++r) {
            std::uint64_t seen = 0;
            std::set<std::vector<Scalar>> distinct;
            for_each_subspace(f, n, r, [&](const Matrix& m) {
                ++seen;
                EXPECT_EQ(m.rank(), r);
                EXPECT_EQ(rref(m).reduced, m);
                distinct.insert(m.entries());
            });
            EXPECT_EQ(seen, subspace_count(2, n, r));
            EXPECT_EQ(distinct.size(), seen);
        }
    EXPECT_EQ(subspace_count(2, 4, 2), 35u);
    EXPECT_EQ(subspace_count(3, 3, 1), 13u);
}

TEST(Universe, SemisimpleIsExactlyTheSimples)
{
    const auto a = semisimple(3);
    UniverseOptions o;
    o.dim_bound = 4;
    const auto u = generate_universe(a, o);
    EXPECT_EQ(u.members.size(), 3);
    EXPECT_TRUE(u.fully_saturated());
    EXPECT_TRUE(u.members.same_members(simples(a, {0, 1, 2})));
}

TEST(Universe, FiveVertexFiniteList)
{
    const auto& u = corpus_universe("fivevertex", 8);
    EXPECT_EQ(u.members.size(), 14);
    EXPECT_TRUE(u.fully_saturated());
    EXPECT_LT(u.members.max_member_dim(), 8);
}

TEST(Universe, KroneckerReachesTheBound)
{
    const auto& u = corpus_universe("kron2", 6);
    EXPECT_GE(u.members.max_member_dim(), 5);
    for (const auto& m : u.members.members()) {
        EXPECT_LE(m.total_dim(), 6);
        EXPECT_TRUE(is_indecomposable(m));
    }
    EXPECT_EQ(kron6().members.size(), 18);
}

TEST(Universe, ClosedUnderRulesWhenSaturated)
{
    const auto& u = corpus_universe("nodeA", 6);
    ASSERT_TRUE(u.fully_saturated());
    for (const auto& m : u.members.members()) {
        for (const auto& s : summands(syzygy(m, 1)))
            if (s.total_dim() <= u.dim_bound)
                EXPECT_TRUE(u.members.find(s).has_value());
        for (const auto& s : summands(cosyzygy(m, 1)))
            if (s.total_dim() <= u.dim_bound)
                EXPECT_TRUE(u.members.find(s).has_value());
    }
}

TEST(Universe, MemberCap)
{
    UniverseOptions o;
    o.dim_bound = 6;
    o.member_cap = 5;
    try {
        generate_universe(corpus_algebra("kron2"), o);
        ADD_FAILURE();
    } catch (const SyzexError& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
    o.stop_at_cap = true;
    const auto u = generate_universe(corpus_algebra("kron2"), o);
    EXPECT_FALSE(u.fully_saturated());
    EXPECT_LE(u.members.size(), 5 + 256);
}

TEST(Universe, SerialAndParallelAgree)
{
    for (const auto& id : {"kron2", "nodeA", "beilinson2"}) {
        UniverseOptions o;
        o.dim_bound = id == std::string("beilinson2") ? 5 : 6;
        o.parallel = false;
        const auto serial = generate_universe(corpus_algebra(id), o);
        o.parallel = true;
        const auto parallel = generate_universe(corpus_algebra(id), o);
        std::vector<std::string> a, b;
        for (const auto& m : serial.members.members())
            a.push_back(serialize(m));
        for (const auto& m : parallel.members.members())
            b.push_back(serialize(m));
        EXPECT_EQ(a, b) << id;
        EXPECT_EQ(serial.log, parallel.log) << id;
    }
}

TEST(RunTasks, LowestExceptionWins)
{
    for (bool par : {false, true}) {
        std::vector<int> hit(20, 0);
        try {
            run_tasks(20, [&](std::size_t i) {
                hit[i] = 1;
                if (i == 7 || i == 13)
                    throw std::runtime_error(std::to_string(i));
            }, par);
            ADD_FAILURE();
        } catch (const std::runtime_error& e) {
            EXPECT_STREQ(e.what(), "7");
        }
        EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), 20);
    }
}

TEST(Bullet, KroneckerOrders)
{
    const auto& u = kron6();
    const auto a = u.algebra;
    const auto s0 = simples(a, {0}), s1 = simples(a, {1});
    BulletOptions o;
    o.mult_bound = 3;
    const auto big = bullet(u, s1, s0, o);
    for (const auto& m : u.members.members())
        EXPECT_TRUE(big.find(m).has_value()) << serialize(m);
    const auto small = bullet(u, s0, s1, o);
    EXPECT_TRUE(small.same_members(simples(a, {0, 1})));
}

TEST(Bullet, EmptySideAndSplitInclusion)
{
    const auto& u = kron6();
    const auto a = u.algebra;
    const auto s = make_addcat(a, {projective(a, 0), simple(a, 0)});
    EXPECT_TRUE(bullet(u, s, AddCat(a)).same_members(s));
    EXPECT_TRUE(bullet(u, AddCat(a), s).same_members(s));
    const auto t = simples(a, {1});
    const auto b = bullet(u, s, t);
    const auto both = merge(s, t);
    for (const auto& m : both.members())
        EXPECT_TRUE(b.find(m).has_value());
}

TEST(Bullet, MembersAreUniverseRepresentatives)
{
    const auto& u = kron6();
    const auto b = bullet(u, simples(u.algebra, {1}), simples(u.algebra, {0}));
    for (const auto& m : b.members()) {
        const auto i = u.members.find(m);
        ASSERT_TRUE(i.has_value());
        EXPECT_EQ(serialize(u.members[*i]), serialize(m));
    }
}

TEST(Layer, BaseCases)
{
    const auto& u = kron6();
    const auto a = u.algebra;
    const auto t = make_addcat(a, {projective(a, 0)});
    EXPECT_TRUE(layer(u, t, 1).same_members(t));
    EXPECT_TRUE(layer(u, AddCat(a), 2).empty());
    EXPECT_TRUE(layer(u, t, 0).empty());
}

TEST(Layer, SimplesGenerateTheWindow)
{
    const auto& u = kron6();
    BulletOptions o;
    o.mult_bound = 3;
    const auto l = layer(u, simples(u.algebra, {0, 1}), 2, o);
    EXPECT_TRUE(l.same_members(u.members));
    const auto l1 = layer(u, simples(u.algebra, {0, 1}), 1, o);
    for (const auto& m : l1.members())
        EXPECT_TRUE(l.find(m).has_value());
}

TEST(Containment, Examples)
{
    const auto& u = kron6();
    const auto a = u.algebra;
    BulletOptions o;
    o.mult_bound = 3;
    EXPECT_TRUE(bounded_containment(u, simples(a, {0}), simples(a, {0, 1}), 1, o).holds);
    EXPECT_TRUE(bounded_containment(u, u.members, simples(a, {0, 1}), 2, o).holds);
    const auto c = bounded_containment(u, u.members, simples(a, {0}), 2, o);
    EXPECT_FALSE(c.holds);
    ASSERT_TRUE(c.counterexample.has_value());
    EXPECT_EQ(c.counterexample->dims, (DimensionVector{0, 1}));
    EXPECT_EQ(ext1_space(simple(a, 0), simple(a, 0)).dimension, 0);
}

TEST(SyzygyCategory, Examples)
{
    const auto& ub = corpus_universe("euclideanB", 6);
    const auto omega = syzygy_category(ub, 1);
    AddCat proj(ub.algebra);
    for (int v = 0; v < ub.algebra->vertex_count(); ++v)
        proj.insert(projective(ub.algebra, v));
    EXPECT_TRUE(omega.same_members(proj));
    EXPECT_TRUE(syzygy_category(ub, 0).same_members(ub.members));
    const auto& beil = corpus_universe("beilinson2", 4);
    const auto omega2 = syzygy_category(beil, 2);
    for (const auto& m : omega2.members())
        EXPECT_TRUE(is_projective(m));
}

TEST(SyzygyCategory, NodeAFiniteCertificate)
{
    UniverseOptions o;
    o.dim_bound = 8;
    const auto u = generate_universe(corpus_algebra("nodeA"), o);
    o.dim_bound = 6;
    const auto smaller = generate_universe(corpus_algebra("nodeA"), o);
    const auto cert = syzygy_finite_certificate(u, smaller, 1);
    EXPECT_TRUE(cert.holds);
    EXPECT_LT(cert.category.max_member_dim(), 8);
    for (const auto& m : cert.category.members())
        for (const auto& s : summands(syzygy(m, 1)))
            EXPECT_TRUE(cert.category.find(s).has_value());
}

TEST(Tits, Classification)
{
    EXPECT_EQ(tits_classification(*linear_an(4)), TitsClass::Dynkin);
    EXPECT_EQ(tits_classification(*semisimple(2)), TitsClass::Dynkin);
    EXPECT_EQ(tits_classification(*corpus_algebra("kron2")), TitsClass::Euclidean);
    EXPECT_EQ(tits_classification(*corpus_algebra("euclideanB")), TitsClass::Euclidean);
    EXPECT_EQ(tits_classification(*kronecker(3)), TitsClass::Wild);
    EXPECT_EQ(tits_classification(*corpus_algebra("fivevertex")), TitsClass::NotHereditary);
}

TEST(Tits, KroneckerRadicalVector)
{
    const auto m = tits_matrix(*corpus_algebra("kron2"));
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0][0] + m[0][1], 0);
    EXPECT_EQ(m[1][0] + m[1][1], 0);
    EXPECT_EQ(m[0][0], 2);
}

TEST(RepType, Verdicts)
{
    const auto k = rep_type_certificate(corpus_algebra("kron2"), 6);
    EXPECT_EQ(k.verdict, RepTypeCertificate::Verdict::Infinite);
    EXPECT_EQ(k.method, RepTypeCertificate::Method::TitsForm);
    EXPECT_TRUE(k.certified);
    const auto b = rep_type_certificate(corpus_algebra("euclideanB"), 6);
    EXPECT_EQ(b.verdict, RepTypeCertificate::Verdict::Infinite);
    const auto f = rep_type_certificate(corpus_algebra("fivevertex"), 8);
    EXPECT_EQ(f.verdict, RepTypeCertificate::Verdict::Finite);
    EXPECT_EQ(f.method, RepTypeCertificate::Method::Enumeration);
    EXPECT_EQ(f.members.size(), 14u);
    const auto clipped = rep_type_certificate(corpus_algebra("fivevertex"), 3);
    EXPECT_NE(clipped.verdict, RepTypeCertificate::Verdict::Finite);
}

TEST(Engine, KroneckerExact)
{
    EdOptions o;
    o.indices = {0, 1, 2};
    const auto r = ed_report(corpus_algebra("kron2"), o);
    const auto& i0 = at(r.intervals, 0);
    EXPECT_TRUE(i0.exact());
    EXPECT_EQ(i0.lower.value, 1);
    EXPECT_EQ(i0.lower.rule, "R1");
    EXPECT_EQ(i0.upper.rule, "R3");
    for (int i : {1, 2}) {
        EXPECT_TRUE(at(r.intervals, i).exact());
        EXPECT_EQ(at(r.intervals, i).upper.value, 0);
        EXPECT_EQ(at(r.intervals, i).upper.rule, "R7");
    }
}

TEST(Engine, EuclideanB)
{
    EdOptions o;
    o.indices = {0, 1, 3};
    const auto r = ed_report(corpus_algebra("euclideanB"), o);
    EXPECT_EQ(r.tits, TitsClass::Euclidean);
    EXPECT_TRUE(at(r.intervals, 0).exact());
    EXPECT_EQ(at(r.intervals, 0).upper.value, 1);
    EXPECT_EQ(at(r.intervals, 1).upper.value, 0);
    EXPECT_EQ(at(r.intervals, 3).upper.value, 0);
}

TEST(Engine, BeilinsonWithExternalFact)
{
    EdInputs in;
    in.loewy_length = 3;
    in.gldim = 2;
    in.max_index = 2;
    in.facts = {ExternalFact{"beilinson2", 0, "exact", 2, "cited"}};
    const auto v = propagate_ed(in);
    for (int i = 0; i <= 2; ++i) {
        EXPECT_TRUE(at(v, i).exact()) << i;
        EXPECT_EQ(at(v, i).lower.value, 2 - i);
    }
    EXPECT_EQ(at(v, 1).lower.rule, "R6");
    EXPECT_EQ(at(v, 1).upper.rule, "R7");
}

TEST(Engine, BeilinsonWithoutFactIsOpen)
{
    EdInputs in;
    in.loewy_length = 3;
    in.gldim = 2;
    const auto v = propagate_ed(in);
    EXPECT_EQ(at(v, 0).lower.value, 0);
    EXPECT_EQ(at(v, 0).upper.value, 2);
}

TEST(Engine, ContradictionReportsBothSides)
{
    EdInputs in;
    in.loewy_length = 2;
    in.gldim = 1;
    in.facts = {ExternalFact{"kron2", 0, "lower", 3, "bogus"}};
    try {
        propagate_ed(in);
        ADD_FAILURE();
    } catch (const SyzexError& e) {
        EXPECT_EQ(e.code(), ErrorCode::ContradictoryFacts);
        const std::string what = e.what();
        std::string all = what;
        for (const auto& d : e.details())
            all += "\n" + d;
        EXPECT_NE(all.find("bogus"), std::string::npos);
        EXPECT_NE(all.find("R3"), std::string::npos);
    }
}

TEST(Engine, SyzygyFiniteGivesZero)
{
    EdInputs in;
    in.loewy_length = 4;
    in.syzygy_finite_from = 1;
    in.max_index = 3;
    const auto v = propagate_ed(in);
    EXPECT_EQ(at(v, 0).upper.value, 1);
    EXPECT_EQ(at(v, 0).upper.rule, "R6");
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(at(v, i).upper.value, 0);
        EXPECT_EQ(at(v, i).upper.rule, "R8");
    }
}

TEST(Engine, FiniteTypeIsZero)
{
    EdOptions o;
    o.indices = {0, 1};
    o.dim_bound = 8;
    const auto r = ed_report(corpus_algebra("fivevertex"), o);
    for (const auto& iv : r.intervals) {
        EXPECT_TRUE(iv.exact());
        EXPECT_EQ(iv.upper.value, 0);
    }
}
