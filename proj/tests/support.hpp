#pragma once

// Shared fixtures, random generators and brute-force oracles for the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "syzex/corpus.hpp"
#include "syzex/extdim.hpp"
#include "syzex/homology.hpp"
#include "syzex/linalg.hpp"
#include "syzex/rep.hpp"

namespace syzex::test {

using Rng = std::mt19937_64;

inline int uniform(Rng& r, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(r);
}

inline AlgebraPtr corpus_algebra(const std::string& id)
{
    static std::map<std::string, AlgebraPtr> cache;
    auto& a = cache[id];
    if (!a)
        a = build_algebra(load_corpus(id).spec);
    return a;
}

inline const Universe& corpus_universe(const std::string& id, int d, int mult = 2)
{
    static std::map<std::tuple<std::string, int, int>, std::unique_ptr<Universe>> cache;
    auto& u = cache[{id, d, mult}];
    if (!u) {
        UniverseOptions o;
        o.dim_bound = d;
        o.mult_bound = mult;
        u = std::make_unique<Universe>(generate_universe(corpus_algebra(id), o));
    }
    return *u;
}

inline Matrix random_matrix(const Field& f, int rows, int cols, Rng& r)
{
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = static_cast<Scalar>(uniform(r, 0, static_cast<int>(f.characteristic()) - 1));
    return m;
}

inline Vec random_vec(const Field& f, int n, Rng& r)
{
    Vec v(n);
    for (auto& x : v)
        x = static_cast<Scalar>(uniform(r, 0, static_cast<int>(f.characteristic()) - 1));
    return v;
}

/// Submodule generated by one element at vertex v, by closure under arrows.
inline std::vector<Matrix> generated_span(const Representation& m, int v, const Vec& x)
{
    const Field f = m.field();
    const auto& q = m.algebra->quiver();
    std::vector<std::vector<Vec>> gens(m.dims.size());
    std::vector<std::pair<int, Vec>> work{{v, x}};
    auto in_span = [&](int w, const Vec& y) {
        if (gens[w].empty())
            return std::all_of(y.begin(), y.end(), [](Scalar s) { return s == 0; });
        auto b = Matrix::from_columns(f, m.dims[w], gens[w]);
        return b.rank() == b.hstack(Matrix::from_columns(f, m.dims[w], {y})).rank();
    };
    while (!work.empty()) {
        auto [w, y] = work.back();
        work.pop_back();
        if (in_span(w, y))
            continue;
        gens[w].push_back(y);
        for (int ai = 0; ai < q.arrow_count(); ++ai)
            if (q.arrow(ai).source == w)
                work.emplace_back(q.arrow(ai).target, m.action[ai].apply(y));
    }
    std::vector<Matrix> spans;
    for (std::size_t w = 0; w < gens.size(); ++w)
        spans.push_back(gens[w].empty() ? Matrix(f, m.dims[w], 0) : Matrix::from_columns(f, m.dims[w], gens[w]));
    return spans;
}

/// A random module of total dimension at most max_dim built from simples,
/// projectives, injectives, sums, extensions and cyclic quotients.
inline Representation random_module(const AlgebraPtr& a, Rng& r, int max_dim, int depth = 0)
{
    const int nv = a->vertex_count();
    for (int attempt = 0; attempt < 20; ++attempt) {
        const int kind = depth > 2 ? uniform(r, 0, 2) : uniform(r, 0, 5);
        const int v = uniform(r, 0, nv - 1);
        Representation m;
        switch (kind) {
        case 0:
            m = simple(a, v);
            break;
        case 1:
            m = projective(a, v);
            break;
        case 2:
            m = injective(a, v);
            break;
        case 3: {
            auto x = random_module(a, r, max_dim - 1, depth + 1);
            auto y = random_module(a, r, max_dim - x.total_dim(), depth + 1);
            m = direct_sum(x, y);
            break;
        }
        case 4: {
            auto x = random_module(a, r, max_dim - 1, depth + 1);
            auto y = random_module(a, r, max_dim - x.total_dim(), depth + 1);
            const auto e = ext1_space(x, y);
            m = extension_middle(ext_class(e, random_vec(a->field(), e.dimension, r))).middle;
            break;
        }
        default: {
            auto p = projective(a, v);
            if (p.total_dim() <= 1)
                continue;
            const int w = uniform(r, 0, nv - 1);
            if (p.dims[w] == 0)
                continue;
            auto x = random_vec(a->field(), p.dims[w], r);
            if (w == v)
                x[0] = 0;   // stay inside the radical when the top is hit
            m = quotient(p, generated_span(p, w, x)).module;
            break;
        }
        }
        if (m.total_dim() >= 1 && m.total_dim() <= max_dim)
            return m;
    }
    return simple(a, uniform(r, 0, nv - 1));
}

/// Random subset of universe members of the given size (or fewer).
inline AddCat random_subset(const Universe& u, Rng& r, int k)
{
    AddCat c(u.algebra);
    for (int i = 0; i < k && u.members.size() > 0; ++i)
        c.insert(u.members[uniform(r, 0, u.members.size() - 1)]);
    return c;
}

/// Number of x in GF(p)^n with A x = 0, by enumeration.
inline std::uint64_t brute_kernel_size(const Matrix& m)
{
    const std::uint64_t p = m.field().characteristic();
    std::uint64_t total = 1;
    for (int i = 0; i < m.cols(); ++i)
        total *= p;
    std::uint64_t count = 0;
    Vec x(m.cols());
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (auto& e : x) {
            e = static_cast<Scalar>(c % p);
            c /= p;
        }
        const auto y = m.apply(x);
        if (std::all_of(y.begin(), y.end(), [](Scalar s) { return s == 0; }))
            ++count;
    }
    return count;
}

/// Number of module homomorphisms m -> n, by enumerating every tuple of
/// linear maps (tiny inputs only).
inline std::uint64_t brute_hom_count(const Representation& m, const Representation& n)
{
    const Field f = m.field();
    const std::uint64_t p = f.characteristic();
    const int nv = static_cast<int>(m.dims.size());
    int entries = 0;
    for (int v = 0; v < nv; ++v)
        entries += m.dims[v] * n.dims[v];
    std::uint64_t total = 1;
    for (int i = 0; i < entries; ++i)
        total *= p;
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        Hom h;
        for (int v = 0; v < nv; ++v) {
            Matrix mv(f, n.dims[v], m.dims[v]);
            for (int i = 0; i < mv.rows(); ++i)
                for (int j = 0; j < mv.cols(); ++j) {
                    mv(i, j) = static_cast<Scalar>(c % p);
                    c /= p;
                }
            h.maps.push_back(mv);
        }
        if (is_homomorphism(h, m, n))
            ++count;
    }
    return count;
}

inline std::uint64_t ipow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace syzex::test
