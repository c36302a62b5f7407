#include "syzex/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "syzex/error.hpp"

namespace syzex {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorCode::NonParallelRelation: return "NonParallelRelation";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ContradictoryFacts: return "ContradictoryFacts";
    case ErrorCode::UnknownCorpusId: return "UnknownCorpusId";
    }
    return "Unknown";
}

int total(const DimensionVector& d)
{
    int t = 0;
    for (int x : d)
        t += x;
    return t;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    for (int v = 0; v < vertex_count(); ++v)
        if (!vertex_lookup_.emplace(vertices_[v], v).second)
            throw SyzexError(ErrorCode::InvalidSpec, "duplicate vertex label '" + vertices_[v] + "'");
    for (int a = 0; a < arrow_count(); ++a) {
        const auto& ar = arrows_[a];
        if (ar.source < 0 || ar.source >= vertex_count() || ar.target < 0 || ar.target >= vertex_count())
            throw SyzexError(ErrorCode::InvalidSpec, "arrow '" + ar.name + "' has an undeclared endpoint");
        if (!arrow_lookup_.emplace(ar.name, a).second)
            throw SyzexError(ErrorCode::InvalidSpec, "duplicate arrow name '" + ar.name + "'");
    }
}

std::optional<int> Quiver::vertex_index(const std::string& label) const
{
    auto it = vertex_lookup_.find(label);
    if (it == vertex_lookup_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const
{
    auto it = arrow_lookup_.find(name);
    if (it == arrow_lookup_.end())
        return std::nullopt;
    return it->second;
}

Quiver Quiver::reversed() const
{
    auto arrows = arrows_;
    for (auto& a : arrows)
        std::swap(a.source, a.target);
    return Quiver(vertices_, std::move(arrows));
}

AlgebraSpec opposite_spec(const AlgebraSpec& spec)
{
    AlgebraSpec op = spec;
    for (auto& a : op.arrows)
        std::swap(a.from, a.to);
    for (auto& rel : op.relations)
        for (auto& t : rel)
            std::reverse(t.path.begin(), t.path.end());
    return op;
}

namespace {

void add_scaled(BasisCombination& acc, const BasisCombination& v, Scalar c, const Field& f)
{
    if (c == 0)
        return;
    for (const auto& [idx, val] : v) {
        auto it = std::lower_bound(acc.begin(), acc.end(), idx, [](const auto& e, int i) { return e.first < i; });
        const Scalar add = f.mul(val, c);
        if (it != acc.end() && it->first == idx) {
            it->second = f.add(it->second, add);
            if (it->second == 0)
                acc.erase(it);
        } else if (add != 0) {
            acc.insert(it, {idx, add});
        }
    }
}

std::vector<Relation> parse_relations(const AlgebraSpec& spec, const Quiver& q, const Field& f)
{
    std::vector<Relation> out;
    for (std::size_t ri = 0; ri < spec.relations.size(); ++ri) {
        const auto& raw = spec.relations[ri];
        const std::string tag = "relation #" + std::to_string(ri);
        std::map<Path, Scalar> merged;
        int length = -1, src = -1, tgt = -1;
        for (const auto& term : raw) {
            if (term.path.empty())
                throw SyzexError(ErrorCode::InvalidSpec, tag + " contains an empty path");
            Path p;
            for (const auto& name : term.path) {
                auto a = q.arrow_index(name);
                if (!a)
                    throw SyzexError(ErrorCode::InvalidSpec, tag + " uses unknown arrow '" + name + "'");
                if (!p.empty() && q.arrow(p.back()).target != q.arrow(*a).source)
                    throw SyzexError(ErrorCode::InvalidSpec, tag + " has a non-composable path (source-to-target convention)");
                p.push_back(*a);
            }
            const int len = static_cast<int>(p.size());
            const int s = q.arrow(p.front()).source, t = q.arrow(p.back()).target;
            if (length < 0) {
                length = len;
                src = s;
                tgt = t;
            } else {
                if (len != length)
                    throw SyzexError(ErrorCode::NonHomogeneousRelation, tag + " mixes path lengths " + std::to_string(length) + " and " + std::to_string(len));
                if (s != src || t != tgt)
                    throw SyzexError(ErrorCode::NonParallelRelation, tag + " combines paths with different endpoints");
            }
            auto& c = merged[p];
            c = f.add(c, f.reduce(term.coeff));
        }
        if (length >= 0 && length < 2)
            throw SyzexError(ErrorCode::InvalidSpec, tag + " has length " + std::to_string(length) + "; admissible relations have length >= 2");
        Relation rel;
        for (auto& [p, c] : merged)
            if (c != 0)
                rel.terms.push_back({c, p});
        if (!rel.terms.empty())
            out.push_back(std::move(rel));
    }
    return out;
}

std::string make_fingerprint(const AlgebraSpec& spec, const Field& f, const std::vector<Relation>& rels, const Quiver& q)
{
    std::ostringstream os;
    os << "p=" << f.characteristic() << ";V=";
    for (const auto& v : q.vertices())
        os << v.size() << ':' << v;
    os << ";A=";
    for (const auto& a : q.arrows())
        os << a.name.size() << ':' << a.name << '/' << a.source << '>' << a.target;
    os << ";R=";
    // relations in normalized form so that reorderings of terms agree
    std::vector<std::string> rs;
    for (const auto& r : rels) {
        std::ostringstream ro;
        for (const auto& t : r.terms) {
            ro << t.coeff << '*';
            for (int a : t.path)
                ro << a << '.';
            ro << '+';
        }
        rs.push_back(ro.str());
    }
    std::sort(rs.begin(), rs.end());
    for (const auto& s : rs)
        os << s << '|';
    (void)spec;
    return os.str();
}

} // namespace

AlgebraPtr build_algebra(const AlgebraSpec& spec, const BuildOptions& options)
{
    if (!is_prime(spec.field) || spec.field >= (1u << 16))
        throw SyzexError(ErrorCode::InvalidSpec, "field must be a prime below 65536, got " + std::to_string(spec.field));
    const Field f(spec.field);

    std::vector<Arrow> arrows;
    {
        std::map<std::string, int> vlookup;
        for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v)
            vlookup.emplace(spec.vertices[v], v);
        for (const auto& a : spec.arrows) {
            auto s = vlookup.find(a.from), t = vlookup.find(a.to);
            if (s == vlookup.end() || t == vlookup.end())
                throw SyzexError(ErrorCode::InvalidSpec, "arrow '" + a.name + "' has an undeclared endpoint");
            arrows.push_back({a.name, s->second, t->second});
        }
    }

    auto alg = std::shared_ptr<PathAlgebra>(new PathAlgebra());
    alg->quiver_ = Quiver(spec.vertices, std::move(arrows));
    alg->field_ = f;
    alg->spec_ = spec;
    alg->options_ = options;
    alg->relations_ = parse_relations(spec, alg->quiver_, f);
    alg->fingerprint_ = make_fingerprint(spec, f, alg->relations_, alg->quiver_);

    const Quiver& q = alg->quiver_;
    const int nv = q.vertex_count();
    const int na = q.arrow_count();

    std::vector<BasisPath>& basis = alg->basis_;
    std::vector<std::vector<BasisCombination>> right(nv);   // per basis element, per arrow
    std::vector<int> level_start{0};

    for (int v = 0; v < nv; ++v) {
        basis.push_back({{}, v, v});
        alg->trivial_.push_back(v);
        right[v].assign(na, {});
    }
    level_start.push_back(nv);

    std::map<int, std::vector<const Relation*>> rel_by_length;
    for (const auto& r : alg->relations_)
        rel_by_length[r.length()].push_back(&r);

    // normal form of a path of length < current level, using finished tables
    auto reduce_word = [&](int start, const Path& word, std::size_t upto) {
        BasisCombination cur{{start, 1}};
        for (std::size_t i = 0; i < upto && !cur.empty(); ++i) {
            BasisCombination next;
            for (const auto& [b, c] : cur)
                add_scaled(next, right[b][word[i]], c, f);
            cur = std::move(next);
        }
        return cur;
    };

    int level = 1;
    for (;; ++level) {
        const int prev_begin = level_start[level - 1];
        const int prev_end = level_start[level];
        if (prev_begin == prev_end) {
            alg->nil_degree_ = level - 1;
            break;
        }
        if (level > options.path_length_cap)
            throw SyzexError(ErrorCode::NotFiniteDimensional,
                             "paths of length " + std::to_string(options.path_length_cap) + " survive the relations; the ideal is not admissible");

        struct Candidate {
            int prev;
            int arrow;
            int source;
            int target;
        };
        std::vector<Candidate> cands;
        std::map<std::pair<int, int>, int> cand_index;
        for (int b = prev_begin; b < prev_end; ++b)
            for (int a = 0; a < na; ++a)
                if (q.arrow(a).source == basis[b].target) {
                    cand_index[{b, a}] = static_cast<int>(cands.size());
                    cands.push_back({b, a, basis[b].source, q.arrow(a).target});
                }

        // slice = (source, target); relation vectors never leave a slice
        std::map<std::pair<int, int>, std::vector<int>> slices;
        for (int c = 0; c < static_cast<int>(cands.size()); ++c)
            slices[{cands[c].source, cands[c].target}].push_back(c);

        std::map<std::pair<int, int>, std::vector<BasisCombination>> slice_rels;   // over candidate indices
        for (const auto& [len, rels] : rel_by_length) {
            if (len > level)
                break;
            const int ubegin = level_start[level - len], uend = level_start[level - len + 1];
            for (const Relation* r : rels) {
                const int rsrc = q.arrow(r->terms.front().path.front()).source;
                const int rtgt = q.arrow(r->terms.front().path.back()).target;
                for (int u = ubegin; u < uend; ++u) {
                    if (basis[u].target != rsrc)
                        continue;
                    BasisCombination vec;
                    for (const auto& t : r->terms) {
                        Path word = basis[u].arrows;
                        word.insert(word.end(), t.path.begin(), t.path.end());
                        auto pre = reduce_word(basis[u].source, word, word.size() - 1);
                        BasisCombination cv;
                        for (const auto& [b, c] : pre)
                            add_scaled(cv, BasisCombination{{cand_index.at({b, word.back()}), 1}}, c, f);
                        add_scaled(vec, cv, t.coeff, f);
                    }
                    if (!vec.empty())
                        slice_rels[{basis[u].source, rtgt}].push_back(std::move(vec));
                }
            }
        }

        // Eliminate; columns are reversed so the surviving basis consists of
        // the earliest candidates in each slice.
        std::vector<BasisCombination> normal_form(cands.size());
        std::vector<int> new_index(cands.size(), -1);
        std::vector<char> eliminated(cands.size(), 0);
        std::map<int, BasisCombination> pivot_rows;   // candidate -> combination of surviving candidates (negated)
        for (const auto& [key, members] : slices) {
            auto it = slice_rels.find(key);
            if (it == slice_rels.end())
                continue;
            const int n = static_cast<int>(members.size());
            std::map<int, int> local;
            for (int i = 0; i < n; ++i)
                local[members[i]] = n - 1 - i;
            Matrix m(f, static_cast<int>(it->second.size()), n);
            for (int r = 0; r < m.rows(); ++r)
                for (const auto& [c, val] : it->second[r])
                    m(r, local.at(c)) = val;
            auto rr = rref(m);
            for (int r = 0; r < rr.rank; ++r) {
                const int pc = rr.pivot_cols[r];
                const int cand = members[n - 1 - pc];
                eliminated[cand] = 1;
                BasisCombination rest;
                for (int col = pc + 1; col < n; ++col)
                    if (rr.reduced(r, col) != 0)
                        rest.push_back({members[n - 1 - col], f.neg(rr.reduced(r, col))});
                std::sort(rest.begin(), rest.end());
                pivot_rows[cand] = std::move(rest);
            }
        }
        for (int c = 0; c < static_cast<int>(cands.size()); ++c) {
            if (eliminated[c])
                continue;
            new_index[c] = static_cast<int>(basis.size());
            BasisPath bp;
            bp.arrows = basis[cands[c].prev].arrows;
            bp.arrows.push_back(cands[c].arrow);
            bp.source = cands[c].source;
            bp.target = cands[c].target;
            basis.push_back(std::move(bp));
            right.emplace_back(na);
        }
        for (int c = 0; c < static_cast<int>(cands.size()); ++c) {
            BasisCombination nf;
            if (!eliminated[c]) {
                nf.push_back({new_index[c], 1});
            } else {
                for (const auto& [other, val] : pivot_rows.at(c)) {
                    // surviving candidates only: rref zeroes other pivot columns
                    nf.push_back({new_index[other], val});
                }
                std::sort(nf.begin(), nf.end());
            }
            right[cands[c].prev][cands[c].arrow] = std::move(nf);
        }
        level_start.push_back(static_cast<int>(basis.size()));
    }

    alg->between_.assign(static_cast<std::size_t>(nv) * nv, {});
    for (int b = 0; b < static_cast<int>(basis.size()); ++b)
        alg->between_[static_cast<std::size_t>(basis[b].source) * nv + basis[b].target].push_back(b);

    alg->right_arrow_.resize(basis.size() * static_cast<std::size_t>(na));
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (int a = 0; a < na; ++a)
            alg->right_arrow_[b * na + a] = std::move(right[b][a]);
    return alg;
}

BasisCombination PathAlgebra::reduce(int start, const Path& path) const
{
    BasisCombination cur{{trivial_[start], 1}};
    int at = start;
    for (int a : path) {
        if (quiver_.arrow(a).source != at)
            return {};
        at = quiver_.arrow(a).target;
        BasisCombination next;
        for (const auto& [b, c] : cur)
            add_scaled(next, right_arrow(b, a), c, field_);
        cur = std::move(next);
        if (cur.empty())
            break;
    }
    return cur;
}

BasisCombination PathAlgebra::multiply(int b1, int b2) const
{
    if (basis_[b1].target != basis_[b2].source)
        return {};
    BasisCombination cur{{b1, 1}};
    for (int a : basis_[b2].arrows) {
        BasisCombination next;
        for (const auto& [b, c] : cur)
            add_scaled(next, right_arrow(b, a), c, field_);
        cur = std::move(next);
        if (cur.empty())
            break;
    }
    return cur;
}

const std::vector<BasisCombination>& PathAlgebra::mult_table() const
{
    std::call_once(mult_once_, [this] {
        const int n = dim();
        mult_table_.resize(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                mult_table_[static_cast<std::size_t>(i) * n + j] = multiply(i, j);
    });
    return mult_table_;
}

std::shared_ptr<const PathAlgebra> PathAlgebra::opposite() const
{
    std::lock_guard lock(opposite_mutex_);
    if (opposite_strong_)
        return opposite_strong_;
    if (auto back = opposite_weak_.lock())
        return back;
    auto op = build_algebra(opposite_spec(spec_), options_);
    op->opposite_weak_ = weak_from_this();
    opposite_strong_ = op;
    return op;
}

std::string PathAlgebra::describe_path(const Path& p, int start) const
{
    if (p.empty())
        return "e_" + quiver_.label(start);
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += '*';
        s += quiver_.arrow(p[i]).name;
    }
    return s;
}

int loewy_length(const PathAlgebra& a)
{
    return a.nil_degree();
}

bool same_algebra(const PathAlgebra& a, const PathAlgebra& b)
{
    return &a == &b || a.fingerprint() == b.fingerprint();
}

} // namespace syzex
