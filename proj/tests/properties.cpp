#include "properties.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <set>

#include "support.hpp"
#include "syzex/error.hpp"

namespace syzex::test {

namespace {

enum class Verdict { Pass, Fail, Skip };

template <class Body>
PropertyOutcome run(const char* name, std::uint64_t seed, int instances, Body body)
{
    PropertyOutcome out;
    out.name = name;
    Rng rng(seed);
    const auto start = std::chrono::steady_clock::now();
    for (int attempt = 0; out.instances < instances && attempt < 20 * instances; ++attempt) {
        std::string why;
        Verdict v;
        try {
            v = body(rng, why);
        } catch (const std::exception& e) {
            v = Verdict::Fail;
            why = std::string("exception: ") + e.what();
        }
        if (v == Verdict::Skip)
            continue;
        ++out.instances;
        if (v == Verdict::Fail) {
            ++out.failures;
            if (out.first_failure.empty())
                out.first_failure = why;
        }
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

struct Window {
    const char* id;
    int d;
};

constexpr Window windows[] = {{"kron2", 5}, {"fivevertex", 6}, {"euclideanB", 4}, {"nodeA", 4}, {"beilinson2", 3}};

const Universe& pick_universe(Rng& r)
{
    const auto& w = windows[uniform(r, 0, static_cast<int>(std::size(windows)) - 1)];
    return corpus_universe(w.id, w.d);
}

std::string dims_of(const Representation& m)
{
    std::string s = "(";
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        s += (v ? "," : "") + std::to_string(m.dims[v]);
    return s + ")";
}

// Layer with no multiplicity cut below the dimension bound.
AddCat full_layer(const Universe& u, const AddCat& t, int n)
{
    BulletOptions o;
    o.mult_bound = u.dim_bound;
    return layer(u, t, n, o);
}

bool subset(const AddCat& a, const AddCat& b, std::string& why, const char* what)
{
    for (const auto& m : a.members())
        if (!b.find(m)) {
            why = std::string(what) + ": " + dims_of(m) + " missing";
            return false;
        }
    return true;
}

Universe widened(const Universe& u, int d)
{
    Universe w = u;
    w.dim_bound = d;
    return w;
}

} // namespace

PropertyOutcome prop_bullet_split_inclusion(std::uint64_t seed, int instances)
{
    return run("bullet split-inclusion", seed, instances, [](Rng& r, std::string& why) {
        const auto& u = pick_universe(r);
        const auto s1 = random_subset(u, r, uniform(r, 1, 3));
        const auto s2 = random_subset(u, r, uniform(r, 1, 3));
        const auto b = bullet(u, s1, s2);
        return subset(s1, b, why, "S1") && subset(s2, b, why, "S2") ? Verdict::Pass : Verdict::Fail;
    });
}

PropertyOutcome prop_sum_lemma(std::uint64_t seed, int instances)
{
    return run("bounded sum-lemma", seed, instances, [](Rng& r, std::string& why) {
        const auto& u = pick_universe(r);
        const auto t1 = random_subset(u, r, uniform(r, 1, 2));
        const auto t2 = random_subset(u, r, uniform(r, 1, 2));
        const int m = uniform(r, 1, 2), n = m == 1 ? uniform(r, 1, 2) : 1;
        BulletOptions o;
        o.mult_bound = u.dim_bound;
        const auto lhs = bullet(u, full_layer(u, t1, m), full_layer(u, t2, n), o);
        const auto rhs = full_layer(u, merge(t1, t2), m + n);
        return subset(lhs, rhs, why, "bullet of layers") ? Verdict::Pass : Verdict::Fail;
    });
}

PropertyOutcome prop_max_lemma(std::uint64_t seed, int instances)
{
    return run("bounded max-lemma", seed, instances, [](Rng& r, std::string& why) {
        const auto& u = pick_universe(r);
        const auto t1 = random_subset(u, r, uniform(r, 1, 2));
        const auto t2 = random_subset(u, r, uniform(r, 1, 2));
        const int m = uniform(r, 1, 2), n = uniform(r, 1, 2);
        const auto rhs = layer(u, merge(t1, t2), std::max(m, n));
        return subset(layer(u, t1, m), rhs, why, "layer T1") && subset(layer(u, t2, n), rhs, why, "layer T2") ? Verdict::Pass : Verdict::Fail;
    });
}

PropertyOutcome prop_resolution_membership(std::uint64_t seed, int instances)
{
    return run("resolution membership", seed, instances, [](Rng& r, std::string& why) {
        const auto& u = pick_universe(r);
        const auto& x = u.members[uniform(r, 0, u.members.size() - 1)];
        if (pd_bounded(x, 2).exceeds())
            return Verdict::Skip;
        const auto p0 = projective_cover(x);
        const auto p1 = projective_cover(p0.kernel);
        const auto m2 = p1.kernel;
        const auto c1 = cosyzygy(p1.cover, 1);
        const auto c2 = cosyzygy(m2, 2);
        // X + I is the middle of 0 -> M0 -> X + I -> cosyzygy(K0) -> 0, and cosyzygy(K0) + I' the middle of
        // 0 -> cosyzygy(M1) -> cosyzygy(K0) + I' -> cosyzygy^2(M2) -> 0; each bullet window covers its sequence
        const int outer_dim = p0.cover.total_dim() + cosyzygy(p0.kernel, 1).total_dim();
        const int inner_dim = c1.total_dim() + c2.total_dim();
        if (std::max(outer_dim, inner_dim) > 12)
            return Verdict::Skip;
        auto window = [&](const Representation& sub, int d) {
            BulletOptions o;
            o.mult_bound = 1;
            for (const auto& [m, k] : decompose(sub).factors)
                o.mult_bound = std::max(o.mult_bound, k);
            return std::make_pair(widened(u, std::max(u.dim_bound, d)), o);
        };
        const auto [wi, oi] = window(c1, inner_dim);
        const auto inner = bullet(wi, make_addcat(u.algebra, {c1}), make_addcat(u.algebra, {c2}), oi);
        const auto [wo, oo] = window(p0.cover, outer_dim);
        // X in add(M0) * (add(cosyzygy M1) * add(cosyzygy^2 M2)), which lies in [T]_3 by monotonicity of the bullet
        const auto outer = bullet(wo, make_addcat(u.algebra, {p0.cover}), inner, oo);
        if (!outer.find(x)) {
            why = "X = " + dims_of(x) + " not in the iterated bullet";
            return Verdict::Fail;
        }
        return Verdict::Pass;
    });
}

PropertyOutcome prop_syzygy_of_layer(std::uint64_t seed, int instances)
{
    return run("syzygy of layer", seed, instances, [](Rng& r, std::string& why) {
        const auto& u = pick_universe(r);
        const auto y = random_subset(u, r, uniform(r, 1, 2));
        const int n = uniform(r, 1, 2), m = uniform(r, 1, 2);
        const auto l = layer(u, y, n);
        const auto& x = l[uniform(r, 0, l.size() - 1)];
        std::vector<Representation> gens;
        double ratio = 0;
        for (const auto& g : y.members()) {
            gens.push_back(syzygy(g, m));
            ratio = std::max(ratio, static_cast<double>(gens.back().total_dim()) / g.total_dim());
        }
        for (int v = 0; v < u.algebra->vertex_count(); ++v)
            gens.push_back(projective(u.algebra, v));
        // horseshoe middle terms have dimension dim Omega^m(sub) + dim Omega^m(quotient)
        const int reach = std::max(u.dim_bound, static_cast<int>(std::ceil(ratio * u.dim_bound)));
        if (reach > 10)
            return Verdict::Skip;
        const auto target = full_layer(widened(u, reach), make_addcat(u.algebra, gens), n);
        for (const auto& s : summands(syzygy(x, m)))
            if (!target.find(s)) {
                why = "summand " + dims_of(s) + " of Omega^" + std::to_string(m) + dims_of(x) + " missing";
                return Verdict::Fail;
            }
        return Verdict::Pass;
    });
}

PropertyOutcome prop_bullet_inequality(std::uint64_t seed, int instances)
{
    return run("bullet inequality", seed, instances, [](Rng& r, std::string& why) {
        const auto& u = pick_universe(r);
        const auto tc = random_subset(u, r, 1);
        const auto td = random_subset(u, r, 1);
        const int m = uniform(r, 0, 1), n = uniform(r, 0, 1);
        const auto c = full_layer(u, tc, m + 1);
        const auto d = full_layer(u, td, n + 1);
        BulletOptions o;
        o.mult_bound = u.dim_bound;
        const auto lhs = bullet(u, c, d, o);
        const auto rhs = full_layer(u, merge(tc, td), m + n + 2);
        return subset(lhs, rhs, why, "bullet(C, D)") ? Verdict::Pass : Verdict::Fail;
    });
}

PropertyOutcome prop_layer_monotone(std::uint64_t seed, int instances)
{
    return run("layer monotonicity", seed, instances, [](Rng& r, std::string& why) {
        const auto& u = pick_universe(r);
        const auto t = random_subset(u, r, uniform(r, 1, 2));
        const int n = uniform(r, 1, 2);
        return subset(layer(u, t, n), layer(u, t, n + 1), why, "layer n") ? Verdict::Pass : Verdict::Fail;
    });
}

PropertyOutcome prop_syzygy_nesting(std::uint64_t seed, int instances)
{
    return run("syzygy-category nesting", seed, instances, [](Rng& r, std::string& why) {
        const auto& u = pick_universe(r);
        const int i = uniform(r, 0, 2);
        const auto si = syzygy_category(u, i);
        const auto next = syzygy_category(u, i + 1);
        const auto& x = next[uniform(r, 0, next.size() - 1)];
        if (is_projective(x))
            return Verdict::Pass;
        for (const auto& m : si.members())
            for (const auto& s : summands(syzygy(m, 1)))
                if (is_iso_indecomposable(s, x))
                    return Verdict::Pass;
        why = dims_of(x) + " in Omega^" + std::to_string(i + 1) + " is not a summand of a syzygy of Omega^" + std::to_string(i);
        return Verdict::Fail;
    });
}

PropertyOutcome prop_duality_layer(std::uint64_t seed, int instances)
{
    return run("duality layer image", seed, instances, [](Rng& r, std::string& why) {
        const auto& w = windows[uniform(r, 0, static_cast<int>(std::size(windows)) - 1)];
        const auto& u = corpus_universe(w.id, w.d);
        static std::map<std::string, std::unique_ptr<Universe>> ops;
        auto& op = ops[w.id];
        if (!op) {
            UniverseOptions o;
            o.dim_bound = w.d;
            op = std::make_unique<Universe>(generate_universe(u.algebra->opposite(), o));
        }
        const auto t = random_subset(u, r, uniform(r, 1, 2));
        const int n = uniform(r, 1, 2);
        std::vector<Representation> dt;
        for (const auto& m : t.members())
            dt.push_back(duality(m));
        const auto l = layer(u, t, n);
        const auto target = full_layer(*op, make_addcat(op->algebra, dt), n);
        for (const auto& x : l.members())
            if (!target.find(duality(x))) {
                why = "D" + dims_of(x) + " missing from the dual layer";
                return Verdict::Fail;
            }
        return Verdict::Pass;
    });
}

PropertyOutcome prop_krull_schmidt(std::uint64_t seed, int instances)
{
    return run("Krull-Schmidt reassembly", seed, instances, [](Rng& r, std::string& why) {
        static const char* ids[] = {"kron2", "fivevertex", "euclideanB", "nodeA", "beilinson2", "xiA"};
        const auto a = corpus_algebra(ids[uniform(r, 0, 5)]);
        const auto m = random_module(a, r, 7);
        const auto d = decompose(m);
        std::vector<Representation> parts;
        for (const auto& [f, k] : d.factors) {
            if (!is_indecomposable(f)) {
                why = "factor " + dims_of(f) + " decomposes";
                return Verdict::Fail;
            }
            for (int i = 0; i < k; ++i)
                parts.push_back(f);
        }
        const auto sum = direct_sum(a, parts);
        if (sum.dims != m.dims) {
            why = "dimension vectors differ: " + dims_of(sum) + " vs " + dims_of(m);
            return Verdict::Fail;
        }
        if (is_iso(sum, m) != IsoAnswer::Yes) {
            why = "reassembled module not isomorphic to " + dims_of(m);
            return Verdict::Fail;
        }
        return Verdict::Pass;
    });
}

PropertyOutcome prop_ext_cardinality(std::uint64_t seed, int instances)
{
    return run("Ext class cardinality", seed, instances, [](Rng& r, std::string& why) {
        static const char* ids[] = {"kron2", "fivevertex", "euclideanB", "nodeA", "beilinson2", "xiB"};
        const auto a = corpus_algebra(ids[uniform(r, 0, 5)]);
        const auto x = random_module(a, r, 5);
        const auto y = random_module(a, r, 5);
        const auto e = ext1_space(x, y);
        const auto pc = projective_cover(x);
        const int expected = hom_space(pc.kernel, y).dim() - hom_space(pc.cover, y).dim() + hom_space(x, y).dim();
        if (e.dimension != expected) {
            why = "dim Ext " + std::to_string(e.dimension) + ", long exact sequence gives " + std::to_string(expected);
            return Verdict::Fail;
        }
        const auto p = a->field().characteristic();
        if (ipow(p, e.dimension) > 4096)
            return Verdict::Skip;
        const auto classes = enumerate_ext_classes(e);
        if (classes.size() != ipow(p, e.dimension)) {
            why = std::to_string(classes.size()) + " classes for dimension " + std::to_string(e.dimension);
            return Verdict::Fail;
        }
        std::set<std::vector<Scalar>> seen;
        for (const auto& c : classes)
            seen.insert(flatten(c.cocycle));
        if (seen.size() != classes.size()) {
            why = "repeated cocycles";
            return Verdict::Fail;
        }
        return Verdict::Pass;
    });
}

PropertyOutcome prop_middle_additivity(std::uint64_t seed, int instances)
{
    return run("middle-term additivity", seed, instances, [](Rng& r, std::string& why) {
        static const char* ids[] = {"kron2", "fivevertex", "euclideanB", "nodeA", "beilinson2", "xiA"};
        const auto a = corpus_algebra(ids[uniform(r, 0, 5)]);
        const auto x = random_module(a, r, 5);
        const auto y = random_module(a, r, 5);
        const auto e = ext1_space(x, y);
        const auto ext = extension_middle(ext_class(e, random_vec(a->field(), e.dimension, r)));
        for (std::size_t v = 0; v < x.dims.size(); ++v)
            if (ext.middle.dims[v] != x.dims[v] + y.dims[v]) {
                why = "middle " + dims_of(ext.middle) + " vs " + dims_of(x) + " + " + dims_of(y);
                return Verdict::Fail;
            }
        if (!is_short_exact(ext, y, x) || !validate(ext.middle).empty()) {
            why = "sequence not exact or middle term invalid";
            return Verdict::Fail;
        }
        return Verdict::Pass;
    });
}

PropertyOutcome prop_engine_monotone(std::uint64_t seed, int instances)
{
    return run("engine monotonicity", seed, instances, [](Rng& r, std::string& why) {
        EdInputs in;
        in.loewy_length = uniform(r, 1, 5);
        if (uniform(r, 0, 1))
            in.gldim = uniform(r, 0, 4);
        const bool can_be_infinite = in.loewy_length >= 2 && (!in.gldim || *in.gldim >= 1);
        if (can_be_infinite && uniform(r, 0, 1))
            in.infinite_type = true;
        else if (!in.infinite_type && uniform(r, 0, 3) == 0)
            in.finite_type = true;
        if (uniform(r, 0, 2) == 0)
            in.syzygy_finite_from = uniform(r, 1, 3);
        in.max_index = 5;
        const auto base = propagate_ed(in);
        for (std::size_t i = 0; i + 1 < base.size(); ++i)
            if (base[i + 1].upper.value > base[i].upper.value) {
                why = "upper bound increases at i = " + std::to_string(i + 1);
                return Verdict::Fail;
            }
        for (const auto& iv : base)
            if (iv.lower.value > iv.upper.value || (iv.exact() && (iv.lower.rule.empty() || iv.upper.rule.empty()))) {
                why = "bad interval at i = " + std::to_string(iv.i);
                return Verdict::Fail;
            }
        auto with = in;
        const int k = uniform(r, 1, 3);
        for (int f = 0; f < k; ++f) {
            const int i = uniform(r, 0, 5);
            const auto& iv = base[i];
            ExternalFact fact;
            fact.algebra = "x";
            fact.i = i;
            fact.kind = uniform(r, 0, 1) ? "lower" : "upper";
            fact.value = uniform(r, iv.lower.value, iv.upper.value);
            fact.citation = "generated";
            with.facts.push_back(fact);
        }
        std::vector<EdInterval> narrowed;
        try {
            narrowed = propagate_ed(with);
        } catch (const SyzexError& e) {
            if (e.code() == ErrorCode::ContradictoryFacts)
                return Verdict::Skip;   // independent facts may clash with each other
            throw;
        }
        for (std::size_t i = 0; i < base.size() && i < narrowed.size(); ++i) {
            if (narrowed[i].lower.value < base[i].lower.value || narrowed[i].upper.value > base[i].upper.value) {
                why = "facts widened the interval at i = " + std::to_string(i);
                return Verdict::Fail;
            }
            if (i + 1 < narrowed.size() && narrowed[i + 1].upper.value > narrowed[i].upper.value) {
                why = "upper bound increases after facts at i = " + std::to_string(i + 1);
                return Verdict::Fail;
            }
        }
        return Verdict::Pass;
    });
}

std::vector<PropertyOutcome> run_all_properties(std::uint64_t seed, int instances)
{
    return {prop_bullet_split_inclusion(seed, instances), prop_sum_lemma(seed + 1, instances),
            prop_max_lemma(seed + 2, instances),          prop_resolution_membership(seed + 3, instances),
            prop_syzygy_of_layer(seed + 4, instances),    prop_bullet_inequality(seed + 5, instances),
            prop_layer_monotone(seed + 6, instances),     prop_syzygy_nesting(seed + 7, instances),
            prop_duality_layer(seed + 8, instances),      prop_krull_schmidt(seed + 9, instances),
            prop_ext_cardinality(seed + 10, instances),   prop_middle_additivity(seed + 11, instances),
            prop_engine_monotone(seed + 12, instances)};
}

} // namespace syzex::test
