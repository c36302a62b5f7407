#include "syzex/homology.hpp"

#include <algorithm>

#include "syzex/error.hpp"

namespace syzex {

namespace {

// Matrices by which every basis path of the algebra acts on m.
std::vector<Matrix> basis_path_matrices(const Representation& m)
{
    const auto& a = *m.algebra;
    std::vector<Matrix> out;
    out.reserve(a.dim());
    for (const auto& b : a.basis())
        out.push_back(path_matrix(m, b.arrows, b.source));
    return out;
}

Hom block_diagonal(const Field& f, const std::vector<const Hom*>& parts, int vertices)
{
    Hom h;
    for (int v = 0; v < vertices; ++v) {
        std::vector<Matrix> blocks;
        for (const Hom* p : parts)
            blocks.push_back(p->maps[v]);
        h.maps.push_back(Matrix::block_diagonal(f, blocks));
    }
    return h;
}

} // namespace

std::string Bounded::str() const
{
    return value ? std::to_string(*value) : "exceeds(" + std::to_string(bound) + ")";
}

ProjectivePresentation projective_cover(const Representation& m)
{
    const auto& alg = m.algebra;
    const auto& a = *alg;
    const auto& q = a.quiver();
    const Field f = m.field();
    const int nv = q.vertex_count();

    ProjectivePresentation pp;
    pp.module = m;
    std::vector<Vec> generators;
    for (int v = 0; v < nv; ++v) {
        Matrix span(f, m.dims[v], 0);
        for (int ai = 0; ai < q.arrow_count(); ++ai)
            if (q.arrow(ai).target == v)
                span = span.hstack(m.action[ai]);
        const auto qm = quotient_map(span, m.dims[v]);
        for (int j = 0; j < qm.section.cols(); ++j) {
            pp.summand_vertices.push_back(v);
            generators.push_back(qm.section.column(j));
        }
    }
    std::vector<Representation> parts;
    for (int v : pp.summand_vertices)
        parts.push_back(projective(alg, v));
    pp.cover = direct_sum(alg, parts);

    const auto pm = basis_path_matrices(m);
    for (int w = 0; w < nv; ++w) {
        Matrix epi(f, m.dims[w], pp.cover.dims[w]);
        int col = 0;
        for (std::size_t j = 0; j < pp.summand_vertices.size(); ++j)
            for (int b : a.paths_between(pp.summand_vertices[j], w)) {
                const Vec img = pm[b].apply(generators[j]);
                for (int r = 0; r < m.dims[w]; ++r)
                    epi(r, col) = img[r];
                ++col;
            }
        pp.epi.maps.push_back(std::move(epi));
    }
    auto ker = kernel(pp.epi, pp.cover);
    pp.kernel = std::move(ker.module);
    pp.inclusion = std::move(ker.map);
    return pp;
}

ProjectivePresentation direct_sum(const AlgebraPtr& a, const std::vector<PresentationPtr>& parts)
{
    ProjectivePresentation pp;
    std::vector<Representation> mods, covers, kernels;
    std::vector<const Hom*> epis, incs;
    for (const auto& p : parts) {
        mods.push_back(p->module);
        covers.push_back(p->cover);
        kernels.push_back(p->kernel);
        epis.push_back(&p->epi);
        incs.push_back(&p->inclusion);
        pp.summand_vertices.insert(pp.summand_vertices.end(), p->summand_vertices.begin(), p->summand_vertices.end());
    }
    pp.module = direct_sum(a, mods);
    pp.cover = direct_sum(a, covers);
    pp.kernel = direct_sum(a, kernels);
    pp.epi = block_diagonal(a->field(), epis, a->vertex_count());
    pp.inclusion = block_diagonal(a->field(), incs, a->vertex_count());
    return pp;
}

Representation syzygy(const Representation& m, int n)
{
    Representation cur = m;
    for (int i = 0; i < n && !cur.is_zero(); ++i)
        cur = projective_cover(cur).kernel;
    return cur;
}

Representation cosyzygy(const Representation& m, int n)
{
    if (n == 0)
        return m;
    return duality(syzygy(duality(m), n));
}

namespace {

// Projective dimension over indecomposable summands. A summand that recurs
// among the summands of its own iterated syzygies has infinite pd.
class PdWalker {
public:
    static constexpr int infinite = -1;
    static constexpr int cut = -2;

    explicit PdWalker(int bound) : bound_(bound) {}

    int module(const Representation& m)
    {
        int worst = 0;
        for (const auto& s : summands(m)) {
            const int v = indecomposable(s, 0);
            if (v < 0)
                return v;
            worst = std::max(worst, v);
        }
        return worst;
    }

private:
    struct Node {
        Representation rep;
        int value;
    };

    int indecomposable(const Representation& x, int depth)
    {
        for (const auto& n : memo_)
            if (n.rep.dims == x.dims && is_iso_indecomposable(n.rep, x))
                return n.value;
        for (const auto& s : stack_)
            if (s.dims == x.dims && is_iso_indecomposable(s, x))
                return infinite;
        auto pp = projective_cover(x);
        if (pp.kernel.is_zero())
            return remember(x, 0);
        if (depth >= bound_)
            return cut;
        stack_.push_back(x);
        int worst = 0;
        for (const auto& s : summands(pp.kernel)) {
            const int v = indecomposable(s, depth + 1);
            if (v < 0) {
                worst = v;
                break;
            }
            worst = std::max(worst, v);
        }
        stack_.pop_back();
        if (worst == cut)
            return cut;
        return remember(x, worst == infinite ? infinite : worst + 1);
    }

    int remember(const Representation& x, int v)
    {
        memo_.push_back({x, v});
        return v;
    }

    int bound_;
    std::vector<Node> memo_;
    std::vector<Representation> stack_;
};

Bounded to_bounded(int v, int bound)
{
    if (v < 0 || v > bound)
        return {std::nullopt, bound};
    return {v, bound};
}

} // namespace

Bounded pd_bounded(const Representation& m, int bound)
{
    PdWalker w(bound);
    return to_bounded(w.module(m), bound);
}

Bounded id_bounded(const Representation& m, int bound)
{
    return pd_bounded(duality(m), bound);
}

Bounded gldim_bounded(const AlgebraPtr& a, int bound)
{
    PdWalker w(bound);
    int g = 0;
    for (int v = 0; v < a->vertex_count(); ++v) {
        const int pd = w.module(simple(a, v));
        if (pd < 0 || pd > bound)
            return {std::nullopt, bound};
        g = std::max(g, pd);
    }
    return {g, bound};
}

int default_dimension_bound(const PathAlgebra& a)
{
    return 2 * a.dim();
}

ExtSpace ext1_space(const Representation& x, const Representation& y)
{
    if (!same_algebra(*x.algebra, *y.algebra))
        throw SyzexError(ErrorCode::AlgebraMismatch, "Ext between modules over different algebras");
    return ext1_space(std::make_shared<const ProjectivePresentation>(projective_cover(x)), y);
}

ExtSpace ext1_space(const PresentationPtr& px, const Representation& y)
{
    if (!same_algebra(*px->module.algebra, *y.algebra))
        throw SyzexError(ErrorCode::AlgebraMismatch, "Ext between modules over different algebras");
    ExtSpace es{px->module, y, px, 0, {}};
    const auto& k = px->kernel;
    if (k.is_zero() || y.is_zero())
        return es;
    const auto h = hom_space(k, y);
    if (h.dim() == 0)
        return es;

    const auto& a = *y.algebra;
    const Field f = y.field();
    const int nv = a.vertex_count();
    std::vector<Vec> hcols;
    for (const auto& b : h.basis)
        hcols.push_back(flatten(b));
    const Coordinates hc(Matrix::from_columns(f, static_cast<int>(hcols.front().size()), hcols));

    // Hom(P(v), Y) = Y_v: the generator goes to y, a basis path b to Y_b y.
    const auto pm = basis_path_matrices(y);
    std::vector<Vec> restrictions;
    for (std::size_t j = 0; j < px->summand_vertices.size(); ++j) {
        const int v = px->summand_vertices[j];
        for (int e = 0; e < y.dims[v]; ++e) {
            Hom phi;
            for (int w = 0; w < nv; ++w) {
                Matrix mw(f, y.dims[w], px->cover.dims[w]);
                int col = 0;
                for (std::size_t jj = 0; jj < px->summand_vertices.size(); ++jj) {
                    const auto& paths = a.paths_between(px->summand_vertices[jj], w);
                    if (jj == j)
                        for (std::size_t bi = 0; bi < paths.size(); ++bi)
                            for (int r = 0; r < y.dims[w]; ++r)
                                mw(r, col + static_cast<int>(bi)) = pm[paths[bi]](r, e);
                    col += static_cast<int>(paths.size());
                }
                phi.maps.push_back(std::move(mw));
            }
            restrictions.push_back(*hc.of(flatten(compose(phi, px->inclusion))));
        }
    }
    std::vector<char> pivot(h.dim(), 0);
    if (!restrictions.empty()) {
        Matrix rows(f, static_cast<int>(restrictions.size()), h.dim());
        for (int r = 0; r < rows.rows(); ++r)
            for (int c = 0; c < h.dim(); ++c)
                rows(r, c) = restrictions[r][c];
        for (int c : rref(rows).pivot_cols)
            pivot[c] = 1;
    }
    for (int c = 0; c < h.dim(); ++c)
        if (!pivot[c])
            es.basis.push_back(h.basis[c]);
    es.dimension = static_cast<int>(es.basis.size());
    return es;
}

ExtClass ext_class(const ExtSpace& e, const Vec& coeffs)
{
    Hom c = zero_hom(e.presentation->kernel, e.y);
    for (std::size_t i = 0; i < e.basis.size(); ++i)
        if (coeffs[i] != 0)
            c = add(c, scale(e.basis[i], coeffs[i]));
    return {e.x, e.y, e.presentation, std::move(c)};
}

std::vector<ExtClass> enumerate_ext_classes(const ExtSpace& e, std::uint64_t budget)
{
    const std::uint64_t p = e.y.field().characteristic();
    std::uint64_t total = 1;
    for (int i = 0; i < e.dimension; ++i) {
        total *= p;
        if (total > budget)
            throw SyzexError(ErrorCode::BudgetExceeded,
                             "Ext^1 has " + std::to_string(p) + "^" + std::to_string(e.dimension) + " classes, above the enumeration budget " +
                                 std::to_string(budget));
    }
    std::vector<ExtClass> out;
    out.reserve(total);
    Vec c(e.dimension, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (int i = 0; i < e.dimension; ++i) {
            c[i] = static_cast<Scalar>(x % p);
            x /= p;
        }
        out.push_back(ext_class(e, c));
    }
    return out;
}

Extension extension_middle(const ExtClass& c)
{
    const auto& pp = *c.presentation;
    const auto& y = c.y;
    const Field f = y.field();
    const auto& q = y.algebra->quiver();
    const int nv = q.vertex_count();
    Extension ext;
    ext.middle.algebra = y.algebra;
    std::vector<QuotientMap> qm;
    for (int w = 0; w < nv; ++w) {
        const Matrix span = c.cocycle.maps[w].scaled(f.neg(1)).vstack(pp.inclusion.maps[w]);
        qm.push_back(quotient_map(span, y.dims[w] + pp.cover.dims[w]));
        ext.middle.dims.push_back(qm.back().projection.rows());
    }
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& ar = q.arrow(ai);
        const Matrix amb = Matrix::block_diagonal(f, {y.action[ai], pp.cover.action[ai]});
        ext.middle.action.push_back(qm[ar.target].projection * amb * qm[ar.source].section);
    }
    for (int w = 0; w < nv; ++w) {
        ext.mono.maps.push_back(qm[w].projection.block(0, 0, ext.middle.dims[w], y.dims[w]));
        const Matrix to_x = Matrix(f, c.x.dims[w], y.dims[w]).hstack(pp.epi.maps[w]);
        ext.epi.maps.push_back(to_x * qm[w].section);
    }
    return ext;
}

bool is_short_exact(const Extension& e, const Representation& y, const Representation& x)
{
    for (std::size_t v = 0; v < e.middle.dims.size(); ++v)
        if (e.middle.dims[v] != y.dims[v] + x.dims[v])
            return false;
    return is_homomorphism(e.mono, y, e.middle) && is_homomorphism(e.epi, e.middle, x) && is_injective(e.mono) &&
           is_surjective(e.epi, x) && is_zero(compose(e.epi, e.mono));
}

namespace {

// Left add(T)-approximation C -> sum of T_j copies, using for each T_j a set
// of maps generating Hom(C, T_j) as a left End(T_j)-module.
Hom left_approximation(const Representation& c, const std::vector<Representation>& ts, Representation& target)
{
    const auto& alg = c.algebra;
    const Field f = c.field();
    const int nv = alg->vertex_count();
    std::vector<Representation> copies;
    std::vector<Hom> maps;
    for (const auto& t : ts) {
        const auto h = hom_space(c, t);
        if (h.dim() == 0)
            continue;
        const auto end = hom_space(t, t);
        std::vector<Vec> span;
        auto in_span = [&](const Vec& v) {
            if (span.empty())
                return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
            return solve(Matrix::from_columns(f, static_cast<int>(v.size()), span), v).has_value();
        };
        for (const auto& g : h.basis) {
            if (in_span(flatten(g)))
                continue;
            for (const auto& e : end.basis)
                span.push_back(flatten(compose(e, g)));
            copies.push_back(t);
            maps.push_back(g);
        }
    }
    target = direct_sum(alg, copies);
    Hom out;
    for (int v = 0; v < nv; ++v) {
        Matrix col(f, 0, c.dims[v]);
        for (const auto& g : maps)
            col = col.vstack(g.maps[v]);
        out.maps.push_back(std::move(col));
    }
    return out;
}

} // namespace

TiltingVerdict tilting_check(const Representation& t, int bound)
{
    TiltingVerdict v;
    v.pd = pd_bounded(t, bound);
    if (v.pd.exceeds()) {
        v.failed_condition = 1;
        v.failures.push_back("condition 1: projective dimension exceeds " + std::to_string(bound));
        return v;
    }
    const int p = *v.pd.value;

    Representation cur = t;
    for (int i = 1; i <= p; ++i) {
        const int e = ext1_space(cur, t).dimension;
        if (e > 0) {
            v.failures.push_back("condition 2: Ext^" + std::to_string(i) + "(T,T) has dimension " + std::to_string(e));
            if (!v.failed_condition)
                v.failed_condition = 2;
        }
        cur = syzygy(cur, 1);
    }

    const auto alg = t.algebra;
    std::vector<Representation> ts;
    for (const auto& [m, k] : decompose(t).factors)
        ts.push_back(m);
    Representation c = regular_module(alg);
    bool ok = true;
    for (int step = 0; step < p && ok; ++step) {
        Representation target;
        const Hom approx = left_approximation(c, ts, target);
        if (target.total_dim() > 4096)
            throw SyzexError(ErrorCode::BudgetExceeded, "add(T)-approximation exceeds 4096 dimensions");
        if (!is_injective(approx)) {
            v.failures.push_back("condition 3: step " + std::to_string(step) + " of the coresolution of A is not injective");
            ok = false;
            break;
        }
        c = cokernel(approx, target).module;
    }
    if (ok) {
        for (const auto& [m, k] : decompose(c).factors) {
            const bool found = std::any_of(ts.begin(), ts.end(), [&](const Representation& x) { return is_iso_indecomposable(m, x); });
            if (!found) {
                v.failures.push_back("condition 3: the last term of the coresolution of A is not in add(T)");
                ok = false;
                break;
            }
        }
    }
    if (!ok && !v.failed_condition)
        v.failed_condition = 3;
    v.is_tilting = v.failures.empty();
    return v;
}

} // namespace syzex
