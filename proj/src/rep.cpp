#include "syzex/rep.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "syzex/error.hpp"

namespace syzex {

const char* to_string(IsoAnswer a)
{
    switch (a) {
    case IsoAnswer::Yes: return "yes";
    case IsoAnswer::No: return "no";
    case IsoAnswer::Unknown: return "unknown";
    }
    return "unknown";
}

Representation zero_module(const AlgebraPtr& a)
{
    Representation m{a, DimensionVector(a->vertex_count(), 0), {}};
    for (const auto& ar : a->quiver().arrows()) {
        (void)ar;
        m.action.emplace_back(a->field(), 0, 0);
    }
    return m;
}

Representation simple(const AlgebraPtr& a, int v)
{
    Representation m{a, DimensionVector(a->vertex_count(), 0), {}};
    m.dims[v] = 1;
    for (const auto& ar : a->quiver().arrows())
        m.action.emplace_back(a->field(), m.dims[ar.target], m.dims[ar.source]);
    return m;
}

Representation projective(const AlgebraPtr& a, int v)
{
    const int nv = a->vertex_count();
    Representation m{a, DimensionVector(nv, 0), {}};
    std::vector<int> pos(a->dim(), -1);
    for (int w = 0; w < nv; ++w) {
        const auto& paths = a->paths_between(v, w);
        m.dims[w] = static_cast<int>(paths.size());
        for (int i = 0; i < m.dims[w]; ++i)
            pos[paths[i]] = i;
    }
    for (int ai = 0; ai < a->arrow_count(); ++ai) {
        const auto& ar = a->quiver().arrow(ai);
        Matrix mat(a->field(), m.dims[ar.target], m.dims[ar.source]);
        const auto& from = a->paths_between(v, ar.source);
        for (int j = 0; j < static_cast<int>(from.size()); ++j)
            for (const auto& [idx, c] : a->right_arrow(from[j], ai))
                mat(pos[idx], j) = c;
        m.action.push_back(std::move(mat));
    }
    return m;
}

Representation injective(const AlgebraPtr& a, int v)
{
    return duality(projective(a->opposite(), v));
}

Representation regular_module(const AlgebraPtr& a)
{
    std::vector<Representation> parts;
    for (int v = 0; v < a->vertex_count(); ++v)
        parts.push_back(projective(a, v));
    return direct_sum(a, parts);
}

Representation duality(const Representation& m)
{
    Representation d{m.algebra->opposite(), m.dims, {}};
    for (const auto& mat : m.action)
        d.action.push_back(mat.transpose());
    return d;
}

Hom duality(const Hom& f)
{
    Hom d;
    for (const auto& mat : f.maps)
        d.maps.push_back(mat.transpose());
    return d;
}

Representation direct_sum(const Representation& m, const Representation& n)
{
    if (!same_algebra(*m.algebra, *n.algebra))
        throw SyzexError(ErrorCode::AlgebraMismatch, "direct sum of modules over different algebras");
    Representation s{m.algebra, m.dims, {}};
    for (std::size_t v = 0; v < s.dims.size(); ++v)
        s.dims[v] += n.dims[v];
    for (std::size_t a = 0; a < m.action.size(); ++a)
        s.action.push_back(Matrix::block_diagonal(m.field(), {m.action[a], n.action[a]}));
    return s;
}

Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts)
{
    Representation s{a, DimensionVector(a->vertex_count(), 0), {}};
    for (const auto& p : parts) {
        if (!same_algebra(*a, *p.algebra))
            throw SyzexError(ErrorCode::AlgebraMismatch, "direct sum of modules over different algebras");
        for (std::size_t v = 0; v < s.dims.size(); ++v)
            s.dims[v] += p.dims[v];
    }
    for (int ai = 0; ai < a->arrow_count(); ++ai) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.action[ai]);
        s.action.push_back(Matrix::block_diagonal(a->field(), blocks));
    }
    return s;
}

Representation power(const Representation& m, int k)
{
    return direct_sum(m.algebra, std::vector<Representation>(k, m));
}

Matrix path_matrix(const Representation& m, const Path& p, int start)
{
    Matrix acc = Matrix::identity(m.field(), m.dims[start]);
    for (int a : p)
        acc = m.action[a] * acc;
    return acc;
}

std::vector<std::string> validate(const Representation& m)
{
    std::vector<std::string> out;
    const auto& a = *m.algebra;
    const auto& q = a.quiver();
    if (static_cast<int>(m.dims.size()) != a.vertex_count()) {
        out.push_back("dimension vector has " + std::to_string(m.dims.size()) + " entries, expected " + std::to_string(a.vertex_count()));
        return out;
    }
    for (int v = 0; v < a.vertex_count(); ++v)
        if (m.dims[v] < 0)
            out.push_back("negative dimension at vertex " + q.label(v));
    if (static_cast<int>(m.action.size()) != a.arrow_count()) {
        out.push_back("action has " + std::to_string(m.action.size()) + " matrices, expected " + std::to_string(a.arrow_count()));
        return out;
    }
    bool shapes_ok = out.empty();
    for (int ai = 0; ai < a.arrow_count(); ++ai) {
        const auto& ar = q.arrow(ai);
        const auto& mat = m.action[ai];
        if (mat.rows() != m.dims[ar.target] || mat.cols() != m.dims[ar.source]) {
            out.push_back("arrow " + ar.name + ": matrix is " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                          ", expected " + std::to_string(m.dims[ar.target]) + "x" + std::to_string(m.dims[ar.source]));
            shapes_ok = false;
        } else if (mat.field() != a.field()) {
            out.push_back("arrow " + ar.name + ": matrix over the wrong field");
            shapes_ok = false;
        }
    }
    if (!shapes_ok)
        return out;
    const Field f = a.field();
    for (std::size_t ri = 0; ri < a.relations().size(); ++ri) {
        const auto& rel = a.relations()[ri];
        const int s = q.arrow(rel.terms.front().path.front()).source;
        const int t = q.arrow(rel.terms.front().path.back()).target;
        Matrix acc(f, m.dims[t], m.dims[s]);
        for (const auto& term : rel.terms)
            acc = acc + path_matrix(m, term.path, s).scaled(term.coeff);
        if (!acc.is_zero()) {
            std::string desc;
            for (const auto& term : rel.terms) {
                if (!desc.empty())
                    desc += " + ";
                desc += std::to_string(term.coeff) + "*" + a.describe_path(term.path, s);
            }
            out.push_back("relation #" + std::to_string(ri) + " (" + desc + ") does not vanish");
        }
    }
    return out;
}

Hom zero_hom(const Representation& from, const Representation& to)
{
    Hom h;
    for (std::size_t v = 0; v < from.dims.size(); ++v)
        h.maps.emplace_back(from.field(), to.dims[v], from.dims[v]);
    return h;
}

Hom identity_hom(const Representation& m)
{
    Hom h;
    for (int d : m.dims)
        h.maps.push_back(Matrix::identity(m.field(), d));
    return h;
}

Hom compose(const Hom& g, const Hom& f)
{
    Hom h;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        h.maps.push_back(g.maps[v] * f.maps[v]);
    return h;
}

Hom add(const Hom& f, const Hom& g)
{
    Hom h;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        h.maps.push_back(f.maps[v] + g.maps[v]);
    return h;
}

Hom scale(const Hom& f, Scalar s)
{
    Hom h;
    for (const auto& m : f.maps)
        h.maps.push_back(m.scaled(s));
    return h;
}

bool is_zero(const Hom& f)
{
    return std::all_of(f.maps.begin(), f.maps.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool is_homomorphism(const Hom& f, const Representation& from, const Representation& to)
{
    const auto& q = from.algebra->quiver();
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        if (f.maps[v].rows() != to.dims[v] || f.maps[v].cols() != from.dims[v])
            return false;
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& ar = q.arrow(ai);
        if (!(f.maps[ar.target] * from.action[ai] == to.action[ai] * f.maps[ar.source]))
            return false;
    }
    return true;
}

bool is_injective(const Hom& f)
{
    return std::all_of(f.maps.begin(), f.maps.end(), [](const Matrix& m) { return m.rank() == m.cols(); });
}

bool is_surjective(const Hom& f, const Representation& to)
{
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        if (f.maps[v].rank() != to.dims[v])
            return false;
    return true;
}

bool is_isomorphism(const Hom& f, const Representation& from, const Representation& to)
{
    return from.dims == to.dims && is_injective(f) && is_surjective(f, to);
}

bool is_nilpotent(const Hom& f, int bound)
{
    for (const auto& m : f.maps) {
        if (m.rows() == 0)
            continue;
        const int e = std::min(bound, m.rows());
        if (!m.power(static_cast<unsigned long>(std::max(e, 1))).is_zero())
            return false;
    }
    return true;
}

SubQuotient submodule(const Representation& m, const std::vector<Matrix>& bases)
{
    const auto& q = m.algebra->quiver();
    SubQuotient out;
    out.module.algebra = m.algebra;
    std::vector<Coordinates> coords;
    for (const auto& b : bases) {
        out.module.dims.push_back(b.cols());
        coords.emplace_back(b);
    }
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& ar = q.arrow(ai);
        const Matrix img = m.action[ai] * bases[ar.source];
        Matrix mat(m.field(), bases[ar.target].cols(), bases[ar.source].cols());
        for (int j = 0; j < img.cols(); ++j) {
            auto c = coords[ar.target].of(img.column(j));
            if (!c)
                throw SyzexError(ErrorCode::InvalidModule, "subspace is not closed under arrow " + ar.name);
            for (int i = 0; i < mat.rows(); ++i)
                mat(i, j) = (*c)[i];
        }
        out.module.action.push_back(std::move(mat));
    }
    out.map.maps = bases;
    return out;
}

SubQuotient quotient(const Representation& m, const std::vector<Matrix>& spans)
{
    const auto& q = m.algebra->quiver();
    std::vector<QuotientMap> qm;
    SubQuotient out;
    out.module.algebra = m.algebra;
    for (std::size_t v = 0; v < spans.size(); ++v) {
        qm.push_back(quotient_map(spans[v], m.dims[v]));
        out.module.dims.push_back(qm.back().projection.rows());
        out.map.maps.push_back(qm.back().projection);
    }
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& ar = q.arrow(ai);
        out.module.action.push_back(qm[ar.target].projection * m.action[ai] * qm[ar.source].section);
    }
    return out;
}

SubQuotient kernel(const Hom& f, const Representation& from)
{
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        bases.push_back(f.maps[v].cols() == 0 ? Matrix(from.field(), 0, 0) : kernel_basis(f.maps[v]));
    return submodule(from, bases);
}

SubQuotient cokernel(const Hom& f, const Representation& to)
{
    return quotient(to, f.maps);
}

SubQuotient image(const Hom& f, const Representation& from, const Representation& to)
{
    (void)from;
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        bases.push_back(f.maps[v].cols() == 0 ? Matrix(to.field(), to.dims[v], 0) : column_space_basis(f.maps[v]));
    return submodule(to, bases);
}

Vec flatten(const Hom& f)
{
    Vec out;
    for (const auto& m : f.maps)
        out.insert(out.end(), m.entries().begin(), m.entries().end());
    return out;
}

Hom unflatten(const Vec& v, const Representation& from, const Representation& to)
{
    Hom h;
    std::size_t off = 0;
    for (std::size_t w = 0; w < from.dims.size(); ++w) {
        const int r = to.dims[w], c = from.dims[w];
        std::vector<Scalar> e(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + static_cast<std::size_t>(r) * c));
        h.maps.emplace_back(from.field(), r, c, std::move(e));
        off += static_cast<std::size_t>(r) * c;
    }
    return h;
}

HomBasis hom_space(const Representation& m, const Representation& n)
{
    if (!same_algebra(*m.algebra, *n.algebra))
        throw SyzexError(ErrorCode::AlgebraMismatch, "hom space between modules over different algebras");
    const auto& q = m.algebra->quiver();
    const Field f = m.field();
    const int nv = q.vertex_count();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    const int unknowns = off[nv];
    HomBasis hb{m, n, {}};
    if (unknowns == 0)
        return hb;

    int eqs = 0;
    for (const auto& ar : q.arrows())
        eqs += n.dims[ar.target] * m.dims[ar.source];
    Matrix sys(f, eqs, unknowns);
    int row = 0;
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& ar = q.arrow(ai);
        const int s = ar.source, t = ar.target;
        const Matrix& ma = m.action[ai];
        const Matrix& na = n.action[ai];
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j, ++row) {
                // (f_t M_a)(i,j) - (N_a f_s)(i,j)
                for (int k = 0; k < m.dims[t]; ++k)
                    if (ma(k, j) != 0)
                        sys(row, off[t] + i * m.dims[t] + k) = f.add(sys(row, off[t] + i * m.dims[t] + k), ma(k, j));
                for (int k = 0; k < n.dims[s]; ++k)
                    if (na(i, k) != 0)
                        sys(row, off[s] + k * m.dims[s] + j) = f.sub(sys(row, off[s] + k * m.dims[s] + j), na(i, k));
            }
    }
    const Matrix ker = kernel_basis(sys);
    for (int c = 0; c < ker.cols(); ++c)
        hb.basis.push_back(unflatten(ker.column(c), m, n));
    return hb;
}

namespace {

bool is_automorphism(const Hom& f)
{
    return std::all_of(f.maps.begin(), f.maps.end(), [](const Matrix& m) { return m.rank() == m.rows() && m.rows() == m.cols(); });
}

Hom combination(const std::vector<Hom>& basis, const Vec& coeffs, const Representation& from, const Representation& to)
{
    Hom h = zero_hom(from, to);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] != 0)
            h = add(h, scale(basis[i], coeffs[i]));
    return h;
}

// Fitting splitting of an endomorphism: M = Im(e^N) + Ker(e^N).
std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& m, const Hom& e)
{
    const int n = m.total_dim();
    std::vector<Matrix> img, ker;
    int rank = 0;
    for (std::size_t v = 0; v < e.maps.size(); ++v) {
        if (m.dims[v] == 0) {
            img.emplace_back(m.field(), 0, 0);
            ker.emplace_back(m.field(), 0, 0);
            continue;
        }
        const Matrix pw = e.maps[v].power(static_cast<unsigned long>(n));
        img.push_back(column_space_basis(pw));
        ker.push_back(kernel_basis(pw));
        rank += img.back().cols();
    }
    if (rank == 0 || rank == n)
        return std::nullopt;
    return std::make_pair(submodule(m, img).module, submodule(m, ker).module);
}

struct Poly {
    std::vector<Scalar> c;   // low degree first, trimmed
};

void trim(Poly& p)
{
    while (!p.c.empty() && p.c.back() == 0)
        p.c.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const Field& f)
{
    trim(a);
    const Scalar lead_inv = f.inv(m.c.back());
    while (a.c.size() >= m.c.size()) {
        const Scalar factor = f.mul(a.c.back(), lead_inv);
        const std::size_t shift = a.c.size() - m.c.size();
        for (std::size_t i = 0; i < m.c.size(); ++i)
            a.c[shift + i] = f.sub(a.c[shift + i], f.mul(factor, m.c[i]));
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Field& f)
{
    if (a.c.empty() || b.c.empty())
        return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
    return poly_mod(r, m, f);
}

Poly poly_gcd(Poly a, Poly b, const Field& f)
{
    trim(a);
    trim(b);
    while (!b.c.empty()) {
        Poly r = poly_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Irreducibility over GF(p): gcd(f, x^(p^i) - x) = 1 for i <= deg/2.
bool irreducible(const Poly& fpoly, const Field& f)
{
    const std::size_t deg = fpoly.c.size() - 1;
    if (deg <= 1)
        return deg == 1;
    Poly x{{0, 1}};
    Poly xp = x;
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        // xp <- xp^p mod f
        Poly base = xp, acc{{1}};
        for (std::uint32_t e = f.characteristic(); e; e >>= 1) {
            if (e & 1)
                acc = poly_mulmod(acc, base, fpoly, f);
            base = poly_mulmod(base, base, fpoly, f);
        }
        xp = acc;
        Poly d = xp;
        if (d.c.size() < 2)
            d.c.resize(2, 0);
        d.c[1] = f.sub(d.c[1], 1);
        trim(d);
        if (d.c.empty())
            return false;
        if (poly_gcd(fpoly, d, f).c.size() > 1)
            return false;
    }
    return true;
}

class Decomposer {
public:
    Decomposer(const DecomposeOptions& opt) : opt_(opt), rng_(opt.seed) {}

    void run(const Representation& m, std::vector<Representation>& out)
    {
        if (m.is_zero())
            return;
        const auto end = hom_space(m, m);
        const Field f = m.field();
        const int n = m.total_dim();
        std::vector<Scalar> lambdas;
        if (f.characteristic() <= 7)
            for (Scalar l = 0; l < f.characteristic(); ++l)
                lambdas.push_back(l);
        else
            lambdas = {0, 1};

        std::vector<Hom> nilpotents;
        auto attempt = [&](const Hom& e) -> bool {
            for (Scalar l : lambdas) {
                Hom x = l == 0 ? e : add(e, scale(identity_hom(m), f.neg(l)));
                if (auto split = fitting_split(m, x)) {
                    run(split->first, out);
                    run(split->second, out);
                    return true;
                }
                if (is_nilpotent(x, n))
                    nilpotents.push_back(std::move(x));
            }
            return false;
        };

        for (const auto& b : end.basis)
            if (attempt(b))
                return;
        const int tries = 2 * end.dim() + 8;
        std::uniform_int_distribution<Scalar> dist(0, f.characteristic() - 1);
        for (int t = 0; t < tries && end.dim() > 1; ++t) {
            Vec c(end.dim());
            for (auto& x : c)
                x = dist(rng_);
            if (attempt(combination(end.basis, c, m, m)))
                return;
        }
        switch (certify_local(m, end, nilpotents, out)) {
        case Verdict::Local:
            out.push_back(m);
            return;
        case Verdict::Split:
            return;
        case Verdict::Unknown:
            certified_ = false;
            out.push_back(m);
            return;
        }
    }

    bool certified() const { return certified_; }

private:
    enum class Verdict { Local, Split, Unknown };

    Verdict certify_local(const Representation& m, const HomBasis& end, std::vector<Hom> nil, std::vector<Representation>& out)
    {
        const Field f = m.field();
        const int n = m.total_dim();
        const int de = end.dim();
        if (de == 1)
            return Verdict::Local;
        std::vector<Vec> ebasis;
        for (const auto& b : end.basis)
            ebasis.push_back(flatten(b));
        const Matrix ecols = Matrix::from_columns(f, static_cast<int>(ebasis.front().size()), ebasis);
        const Coordinates ecoord(ecols);

        for (int round = 0; round < 64; ++round) {
            // two-sided ideal generated by the nilpotents, in End coordinates
            std::vector<Vec> jgen;
            for (const auto& x : nil)
                jgen.push_back(*ecoord.of(flatten(x)));
            std::vector<Vec> jbasis = span_basis(f, de, jgen);
            for (std::size_t i = 0; i < jbasis.size(); ++i) {
                const Hom x = combination(end.basis, jbasis[i], m, m);
                std::vector<Vec> more = jbasis;
                for (const auto& b : end.basis) {
                    more.push_back(*ecoord.of(flatten(compose(b, x))));
                    more.push_back(*ecoord.of(flatten(compose(x, b))));
                }
                auto next = span_basis(f, de, more);
                if (next.size() != jbasis.size()) {
                    jbasis = std::move(next);
                    i = static_cast<std::size_t>(-1);
                }
            }
            // J must be nilpotent
            std::vector<Vec> power = jbasis;
            for (int k = 0; k <= n && !power.empty(); ++k) {
                std::vector<Vec> prod;
                for (const auto& a : power)
                    for (const auto& b : jbasis)
                        prod.push_back(*ecoord.of(flatten(compose(combination(end.basis, a, m, m), combination(end.basis, b, m, m)))));
                power = span_basis(f, de, prod);
            }
            if (!power.empty()) {
                for (const auto& v : power)
                    if (auto split = fitting_split(m, combination(end.basis, v, m, m))) {
                        run(split->first, out);
                        run(split->second, out);
                        return Verdict::Split;
                    }
                return Verdict::Unknown;
            }
            const int r = de - static_cast<int>(jbasis.size());
            if (r == 1)
                return Verdict::Local;

            // complement of J: End basis vectors at non-pivot positions
            Matrix jrows(f, static_cast<int>(jbasis.size()), de);
            for (int i = 0; i < jrows.rows(); ++i)
                for (int c = 0; c < de; ++c)
                    jrows(i, c) = jbasis[i][c];
            auto rr = rref(jrows);
            std::vector<char> piv(de, 0);
            for (int c : rr.pivot_cols)
                piv[c] = 1;
            std::vector<int> comp;
            for (int c = 0; c < de; ++c)
                if (!piv[c])
                    comp.push_back(c);
            auto qm = quotient_map(jrows.rows() ? jrows.transpose() : Matrix(f, de, 0), de);
            auto class_of = [&](const Hom& h) { return qm.projection.apply(*ecoord.of(flatten(h))); };

            // an element whose minimal polynomial mod J is irreducible of degree r
            for (int c = 0; c < de; ++c) {
                const Hom x = end.basis[c];
                std::vector<Vec> krylov;
                Hom cur = identity_hom(m);
                std::optional<Poly> minpoly;
                for (int k = 0; k <= r; ++k) {
                    Vec cls = class_of(cur);
                    krylov.push_back(cls);
                    Matrix km = Matrix::from_columns(f, r, krylov);
                    if (km.rank() < static_cast<int>(krylov.size())) {
                        Matrix prev = Matrix::from_columns(f, r, std::vector<Vec>(krylov.begin(), krylov.end() - 1));
                        auto sol = solve(prev, cls);
                        Poly p;
                        for (Scalar s : *sol)
                            p.c.push_back(f.neg(s));
                        p.c.push_back(1);
                        minpoly = p;
                        break;
                    }
                    cur = compose(x, cur);
                }
                if (minpoly && static_cast<int>(minpoly->c.size()) - 1 == r && irreducible(*minpoly, f))
                    return Verdict::Local;
            }

            // exhaustive scan of E/J
            std::uint64_t total = 1;
            for (int i = 0; i < r && total <= opt_.locality_budget; ++i)
                total *= f.characteristic();
            if (total > opt_.locality_budget)
                return Verdict::Unknown;
            bool grew = false;
            Vec digits(r, 0);
            for (std::uint64_t code = 1; code < total && !grew; ++code) {
                std::uint64_t c = code;
                for (int i = 0; i < r; ++i) {
                    digits[i] = static_cast<Scalar>(c % f.characteristic());
                    c /= f.characteristic();
                }
                Vec full(de, 0);
                for (int i = 0; i < r; ++i)
                    full[comp[i]] = digits[i];
                const Hom y = combination(end.basis, full, m, m);
                if (is_automorphism(y))
                    continue;
                if (auto split = fitting_split(m, y)) {
                    run(split->first, out);
                    run(split->second, out);
                    return Verdict::Split;
                }
                nil.push_back(y);
                grew = true;
            }
            if (!grew)
                return Verdict::Local;
        }
        return Verdict::Unknown;
    }

    static std::vector<Vec> span_basis(const Field& f, int dim, const std::vector<Vec>& gens)
    {
        if (gens.empty())
            return {};
        Matrix rows(f, static_cast<int>(gens.size()), dim);
        for (int i = 0; i < rows.rows(); ++i)
            for (int c = 0; c < dim; ++c)
                rows(i, c) = gens[i][c];
        auto rr = rref(rows);
        std::vector<Vec> out;
        for (int i = 0; i < rr.rank; ++i) {
            auto r = rr.reduced.row(i);
            out.emplace_back(r.begin(), r.end());
        }
        return out;
    }

    DecomposeOptions opt_;
    std::mt19937_64 rng_;
    bool certified_ = true;
};

} // namespace

int Decomposition::factor_count() const
{
    int c = 0;
    for (const auto& [m, k] : factors)
        c += k;
    return c;
}

std::vector<Representation> summands(const Representation& m, const DecomposeOptions& opt)
{
    Decomposer d(opt);
    std::vector<Representation> out;
    d.run(m, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Decomposition decompose(const Representation& m, const DecomposeOptions& opt)
{
    Decomposer d(opt);
    std::vector<Representation> parts;
    d.run(m, parts);
    std::sort(parts.begin(), parts.end(), canonical_less);
    Decomposition out;
    out.certified = d.certified();
    for (auto& p : parts) {
        bool merged = false;
        for (auto& [rep, k] : out.factors)
            if (rep.dims == p.dims && is_iso_indecomposable(rep, p)) {
                ++k;
                merged = true;
                break;
            }
        if (!merged)
            out.factors.emplace_back(std::move(p), 1);
    }
    return out;
}

bool is_indecomposable(const Representation& m)
{
    return !m.is_zero() && summands(m).size() == 1;
}

bool is_iso_indecomposable(const Representation& m, const Representation& n)
{
    if (m.dims != n.dims)
        return false;
    if (invariant_key(m) != invariant_key(n))
        return false;
    const auto mn = hom_space(m, n);
    if (mn.basis.empty())
        return false;
    const auto nm = hom_space(n, m);
    const int bound = m.total_dim();
    for (const auto& g : nm.basis)
        for (const auto& fh : mn.basis)
            if (!is_nilpotent(compose(g, fh), bound))
                return true;
    return false;
}

IsoAnswer is_iso(const Representation& m, const Representation& n)
{
    if (!same_algebra(*m.algebra, *n.algebra))
        throw SyzexError(ErrorCode::AlgebraMismatch, "isomorphism test between modules over different algebras");
    if (m.dims != n.dims)
        return IsoAnswer::No;
    if (m.is_zero())
        return IsoAnswer::Yes;
    if (invariant_key(m) != invariant_key(n))
        return IsoAnswer::No;
    const auto dm = decompose(m);
    const auto dn = decompose(n);
    if (!dm.certified || !dn.certified)
        return is_iso_search(m, n);
    if (dm.factors.size() != dn.factors.size())
        return IsoAnswer::No;
    std::vector<char> used(dn.factors.size(), 0);
    for (const auto& [fm, km] : dm.factors) {
        bool found = false;
        for (std::size_t j = 0; j < dn.factors.size(); ++j) {
            if (used[j] || dn.factors[j].second != km)
                continue;
            if (is_iso_indecomposable(fm, dn.factors[j].first)) {
                used[j] = 1;
                found = true;
                break;
            }
        }
        if (!found)
            return IsoAnswer::No;
    }
    return IsoAnswer::Yes;
}

IsoAnswer is_iso_search(const Representation& m, const Representation& n, std::uint64_t budget, std::uint64_t seed)
{
    if (!same_algebra(*m.algebra, *n.algebra))
        throw SyzexError(ErrorCode::AlgebraMismatch, "isomorphism test between modules over different algebras");
    if (m.dims != n.dims)
        return IsoAnswer::No;
    if (m.is_zero())
        return IsoAnswer::Yes;
    const auto hb = hom_space(m, n);
    const Field f = m.field();
    const int k = hb.dim();
    if (k == 0)
        return IsoAnswer::No;
    std::uint64_t total = 1;
    bool exhaustive = true;
    for (int i = 0; i < k; ++i) {
        total *= f.characteristic();
        if (total > budget) {
            exhaustive = false;
            break;
        }
    }
    Vec c(k, 0);
    if (exhaustive) {
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t x = code;
            for (int i = 0; i < k; ++i) {
                c[i] = static_cast<Scalar>(x % f.characteristic());
                x /= f.characteristic();
            }
            if (is_isomorphism(combination(hb.basis, c, m, n), m, n))
                return IsoAnswer::Yes;
        }
        return IsoAnswer::No;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Scalar> dist(0, f.characteristic() - 1);
    for (std::uint64_t t = 0; t < budget; ++t) {
        for (auto& x : c)
            x = dist(rng);
        if (is_isomorphism(combination(hb.basis, c, m, n), m, n))
            return IsoAnswer::Yes;
    }
    return IsoAnswer::Unknown;
}

TopRadical top_and_radical(const Representation& m)
{
    const auto& q = m.algebra->quiver();
    const Field f = m.field();
    std::vector<Matrix> rad;
    for (int w = 0; w < q.vertex_count(); ++w) {
        Matrix span(f, m.dims[w], 0);
        for (int ai = 0; ai < q.arrow_count(); ++ai)
            if (q.arrow(ai).target == w)
                span = span.hstack(m.action[ai]);
        rad.push_back(span.cols() == 0 ? span : column_space_basis(span));
    }
    TopRadical tr;
    auto sub = submodule(m, rad);
    tr.rad = std::move(sub.module);
    tr.inclusion = std::move(sub.map);
    auto quo = quotient(m, rad);
    tr.top = std::move(quo.module);
    tr.projection = std::move(quo.map);
    return tr;
}

DimensionVector socle_dims(const Representation& m)
{
    const auto& q = m.algebra->quiver();
    DimensionVector out(q.vertex_count(), 0);
    for (int v = 0; v < q.vertex_count(); ++v) {
        Matrix stack(m.field(), 0, m.dims[v]);
        for (int ai = 0; ai < q.arrow_count(); ++ai)
            if (q.arrow(ai).source == v)
                stack = stack.vstack(m.action[ai]);
        out[v] = m.dims[v] - (stack.rows() == 0 ? 0 : stack.rank());
    }
    return out;
}

std::string serialize(const Representation& m)
{
    std::string s;
    for (int d : m.dims) {
        s += std::to_string(d);
        s += ',';
    }
    for (const auto& mat : m.action) {
        s += '|';
        for (Scalar e : mat.entries()) {
            s += std::to_string(e);
            s += ',';
        }
    }
    return s;
}

bool canonical_less(const Representation& a, const Representation& b)
{
    if (a.dims != b.dims) {
        const int ta = a.total_dim(), tb = b.total_dim();
        if (ta != tb)
            return ta < tb;
        return a.dims < b.dims;
    }
    return serialize(a) < serialize(b);
}

std::string invariant_key(const Representation& m)
{
    std::ostringstream os;
    for (int d : m.dims)
        os << d << ',';
    os << '|';
    for (const auto& mat : m.action)
        os << (mat.rows() && mat.cols() ? mat.rank() : 0) << ',';
    os << '|';
    const auto& q = m.algebra->quiver();
    for (int w = 0; w < q.vertex_count(); ++w) {
        Matrix span(m.field(), m.dims[w], 0);
        for (int ai = 0; ai < q.arrow_count(); ++ai)
            if (q.arrow(ai).target == w)
                span = span.hstack(m.action[ai]);
        os << m.dims[w] - (span.cols() ? span.rank() : 0) << ',';
    }
    os << '|';
    for (int s : socle_dims(m))
        os << s << ',';
    return os.str();
}

bool is_projective(const Representation& m)
{
    const auto tr = top_and_radical(m);
    int cover = 0;
    for (int v = 0; v < m.algebra->vertex_count(); ++v) {
        if (tr.top.dims[v] == 0)
            continue;
        int pv = 0;
        for (int w = 0; w < m.algebra->vertex_count(); ++w)
            pv += static_cast<int>(m.algebra->paths_between(v, w).size());
        cover += tr.top.dims[v] * pv;
    }
    return cover == m.total_dim();
}

} // namespace syzex
