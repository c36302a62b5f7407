#include "syzex/extdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <set>
#include <sstream>

#include "syzex/error.hpp"
#include "syzex/kernels.hpp"

namespace syzex {

// ---------------------------------------------------------------- AddCat

std::optional<int> AddCat::find(const Representation& m) const
{
    auto it = buckets_.find(invariant_key(m));
    if (it == buckets_.end())
        return std::nullopt;
    for (int i : it->second)
        if (is_iso_indecomposable(members_[i], m))
            return i;
    return std::nullopt;
}

int AddCat::insert(const Representation& m, bool* added)
{
    if (!algebra_)
        algebra_ = m.algebra;
    auto key = invariant_key(m);
    auto& bucket = buckets_[key];
    for (int i : bucket)
        if (is_iso_indecomposable(members_[i], m)) {
            if (added)
                *added = false;
            return i;
        }
    members_.push_back(m);
    bucket.push_back(size() - 1);
    if (added)
        *added = true;
    return size() - 1;
}

void AddCat::replace(int i, const Representation& m)
{
    members_[i] = m;
}

bool AddCat::contains(const Representation& m) const
{
    if (m.is_zero())
        return true;
    for (const auto& s : summands(m))
        if (!find(s))
            return false;
    return true;
}

AddCat AddCat::sorted() const
{
    auto ms = members_;
    std::sort(ms.begin(), ms.end(), canonical_less);
    AddCat out(algebra_);
    for (const auto& m : ms)
        out.insert(m);
    return out;
}

bool AddCat::same_members(const AddCat& other) const
{
    if (size() != other.size())
        return false;
    for (const auto& m : other.members_)
        if (!find(m))
            return false;
    return true;
}

int AddCat::max_member_dim() const
{
    int best = 0;
    for (const auto& m : members_)
        best = std::max(best, m.total_dim());
    return best;
}

AddCat make_addcat(const AlgebraPtr& a, const std::vector<Representation>& modules)
{
    AddCat c(a);
    for (const auto& m : modules)
        for (const auto& s : summands(m))
            c.insert(s);
    return c;
}

AddCat merge(const AddCat& x, const AddCat& y)
{
    AddCat out(x.algebra() ? x.algebra() : y.algebra());
    for (const auto& m : x.members())
        out.insert(m);
    for (const auto& m : y.members())
        out.insert(m);
    return out;
}

// ---------------------------------------------------------------- subspaces

void for_each_subspace(const Field& f, int n, int r, const std::function<void(const Matrix&)>& visit)
{
    if (r < 0 || r > n)
        return;
    if (r == 0) {
        visit(Matrix(f, 0, n));
        return;
    }
    const Scalar p = f.characteristic();
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i)
        piv[i] = i;
    while (true) {
        std::vector<bool> is_piv(n, false);
        for (int c : piv)
            is_piv[c] = true;
        std::vector<std::pair<int, int>> free;
        for (int s = 0; s < r; ++s)
            for (int c = piv[s] + 1; c < n; ++c)
                if (!is_piv[c])
                    free.emplace_back(s, c);
        Matrix m(f, r, n);
        for (int s = 0; s < r; ++s)
            m(s, piv[s]) = 1;
        std::vector<Scalar> digits(free.size(), 0);
        while (true) {
            for (std::size_t k = 0; k < free.size(); ++k)
                m(free[k].first, free[k].second) = digits[k];
            visit(m);
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == p)
                digits[k++] = 0;
            if (k == digits.size())
                break;
        }
        int i = r - 1;
        while (i >= 0 && piv[i] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++piv[i];
        for (int j = i + 1; j < r; ++j)
            piv[j] = piv[j - 1] + 1;
    }
}

std::uint64_t subspace_count(std::uint64_t p, int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    long double c = 1;
    for (int i = 0; i < r; ++i)
        c *= (std::pow(static_cast<long double>(p), n - i) - 1) / (std::pow(static_cast<long double>(p), i + 1) - 1);
    if (c >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::llround(c));
}

// ---------------------------------------------------------------- gluing

namespace {

std::vector<bool> support(const Representation& m)
{
    std::vector<bool> s(m.dims.size());
    for (std::size_t v = 0; v < s.size(); ++v)
        s[v] = m.dims[v] > 0;
    return s;
}

// reach[v][w]: some path of positive length runs from v to w.
std::vector<std::vector<bool>> positive_reach(const PathAlgebra& a)
{
    const int n = a.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (const auto& ar : a.quiver().arrows())
        reach[ar.source][ar.target] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
    return reach;
}

// Necessary condition for Ext^1(x, y) != 0.
bool may_extend(const std::vector<std::vector<bool>>& reach, const Representation& x, const Representation& y)
{
    const auto sx = support(x), sy = support(y);
    for (std::size_t v = 0; v < sx.size(); ++v)
        if (sx[v])
            for (std::size_t w = 0; w < sy.size(); ++w)
                if (sy[w] && reach[v][w])
                    return true;
    return false;
}

Hom combination(const Field& f, const ExtSpace& e, const Matrix& w, int row, int offset)
{
    Hom h;
    for (const auto& m : e.basis.front().maps)
        h.maps.push_back(Matrix(f, m.rows(), m.cols()));
    for (int l = 0; l < e.dimension; ++l) {
        const Scalar c = w(row, offset + l);
        if (c == 0)
            continue;
        for (std::size_t v = 0; v < h.maps.size(); ++v)
            h.maps[v] = h.maps[v] + e.basis[l].maps[v].scaled(c);
    }
    return h;
}

// Middle term of the class with kernel(x copy r) -> (y copy c) given by
// blocks[r][c]; an empty Hom stands for zero.
Representation glue(const AlgebraPtr& a, const std::vector<PresentationPtr>& xs, const std::vector<Representation>& ys,
                    const std::vector<std::vector<Hom>>& blocks)
{
    const Field f = a->field();
    const int nv = a->vertex_count();
    auto px = std::make_shared<ProjectivePresentation>(direct_sum(a, xs));
    auto y = direct_sum(a, ys);
    Hom cocycle;
    for (int v = 0; v < nv; ++v) {
        Matrix m(f, y.dims[v], px->kernel.dims[v]);
        int col = 0;
        for (std::size_t r = 0; r < xs.size(); ++r) {
            int row = 0;
            for (std::size_t c = 0; c < ys.size(); ++c) {
                if (!blocks[r][c].maps.empty())
                    m.set_block(row, col, blocks[r][c].maps[v]);
                row += ys[c].dims[v];
            }
            col += xs[r]->kernel.dims[v];
        }
        cocycle.maps.push_back(std::move(m));
    }
    ExtClass cls{px->module, y, px, cocycle};
    return extension_middle(cls).middle;
}

std::string round_note(int round, int added, int total, int discarded)
{
    std::ostringstream os;
    os << "round " << round << ": +" << added << " members (" << total << " total), " << discarded << " discarded so far";
    return os.str();
}

} // namespace

// ---------------------------------------------------------------- universe

bool Universe::fully_saturated() const
{
    return std::all_of(saturated.begin(), saturated.end(), [](const auto& kv) { return kv.second; });
}

std::vector<Representation> default_seeds(const AlgebraPtr& a)
{
    std::vector<Representation> s;
    for (int v = 0; v < a->vertex_count(); ++v)
        s.push_back(simple(a, v));
    for (int v = 0; v < a->vertex_count(); ++v)
        s.push_back(projective(a, v));
    for (int v = 0; v < a->vertex_count(); ++v)
        s.push_back(injective(a, v));
    return s;
}

namespace {

struct Candidate {
    Representation rep;
    std::string origin;
};

struct Task {
    enum Kind { Syz, Cosyz, Ext } kind;
    int i = 0;
    int j = 0;
};

std::string member_name(int i)
{
    return "m" + std::to_string(i);
}

} // namespace

Universe generate_universe(const AlgebraPtr& a, const UniverseOptions& opt)
{
    Universe u;
    u.algebra = a;
    u.dim_bound = opt.dim_bound;
    u.mult_bound = opt.mult_bound;
    u.rules = opt.rules | RuleSummands;
    u.members = AddCat(a);
    const Field f = a->field();
    const int d = opt.dim_bound;
    const auto reach = positive_reach(*a);

    auto offer = [&](const Representation& r, const std::string& origin) {
        if (r.total_dim() > d) {
            ++u.discarded;
            return;
        }
        bool added = false;
        const int idx = u.members.insert(r, &added);
        if (added) {
            u.origin.push_back(origin);
            u.presentations.push_back(std::make_shared<ProjectivePresentation>(projective_cover(r)));
        } else if (serialize(r) < serialize(u.members[idx])) {
            u.members.replace(idx, r);
            u.presentations[idx] = std::make_shared<ProjectivePresentation>(projective_cover(r));
        }
    };

    for (const auto& s : opt.seeds.empty() ? default_seeds(a) : opt.seeds) {
        if (s.total_dim() > d) {
            ++u.discarded;
            u.log.push_back("seed of dimension " + std::to_string(s.total_dim()) + " above the bound");
            continue;
        }
        for (const auto& part : summands(s))
            offer(part, "seed");
    }
    u.log.push_back(round_note(0, u.members.size(), u.members.size(), u.discarded));

    auto run_task = [&](const Task& task) {
        std::vector<Candidate> out;
        const auto& x = u.members[task.i];
        if (task.kind == Task::Syz || task.kind == Task::Cosyz) {
            const bool syz = task.kind == Task::Syz;
            auto r = syz ? u.presentations[task.i]->kernel : cosyzygy(x, 1);
            const std::string origin = std::string(syz ? "syzygy(" : "cosyzygy(") + member_name(task.i) + ")";
            for (auto& s : summands(r))
                out.push_back({std::move(s), origin});
            return out;
        }
        const auto& y = u.members[task.j];
        const auto e = ext1_space(u.presentations[task.i], y);
        if (e.dimension == 0)
            return out;
        const int kmax = std::min(opt.mult_bound, e.dimension);
        std::uint64_t classes = 0;
        for (int k = 1; k <= kmax && x.total_dim() + k * y.total_dim() <= d; ++k) {
            classes += subspace_count(f.characteristic(), e.dimension, k);
            if (classes > opt.class_budget)
                throw SyzexError(ErrorCode::BudgetExceeded,
                                 "extension classes of " + member_name(task.i) + " by " + member_name(task.j) + " exceed the class budget");
            const std::string origin = "ext(" + member_name(task.i) + ", " + member_name(task.j) + (k > 1 ? "^" + std::to_string(k) : "") + ")";
            std::vector<PresentationPtr> xs{u.presentations[task.i]};
            std::vector<Representation> ys(k, y);
            for_each_subspace(f, e.dimension, k, [&](const Matrix& w) {
                std::vector<std::vector<Hom>> blocks(1, std::vector<Hom>(k));
                for (int c = 0; c < k; ++c)
                    blocks[0][c] = combination(f, e, w, c, 0);
                for (auto& s : summands(glue(a, xs, ys, blocks)))
                    out.push_back({std::move(s), origin});
            });
        }
        return out;
    };

    bool capped = false;
    int processed = 0;
    while (processed < u.members.size() && !capped) {
        const int begin = processed, end = u.members.size();
        std::vector<Task> tasks;
        for (int x = begin; x < end; ++x) {
            if (opt.rules & RuleSyzygy)
                tasks.push_back({Task::Syz, x, 0});
            if (opt.rules & RuleCosyzygy)
                tasks.push_back({Task::Cosyz, x, 0});
        }
        if (opt.rules & RuleExtensions)
            for (int i = 0; i < end; ++i)
                for (int j = 0; j < end; ++j) {
                    if (i < begin && j < begin)
                        continue;
                    const auto& x = u.members[i];
                    const auto& y = u.members[j];
                    if (x.total_dim() + y.total_dim() > d || !may_extend(reach, x, y))
                        continue;
                    tasks.push_back({Task::Ext, i, j});
                }

        const int before = u.members.size();
        constexpr std::size_t chunk = 256;
        for (std::size_t lo = 0; lo < tasks.size() && !capped; lo += chunk) {
            const std::size_t hi = std::min(tasks.size(), lo + chunk);
            std::vector<std::vector<Candidate>> results(hi - lo);
            run_tasks(
                hi - lo, [&](std::size_t t) { results[t] = run_task(tasks[lo + t]); }, opt.parallel);
            for (auto& batch : results)
                for (auto& c : batch)
                    offer(c.rep, c.origin);
            if (static_cast<std::size_t>(u.members.size()) > opt.member_cap) {
                if (!opt.stop_at_cap)
                    throw SyzexError(ErrorCode::BudgetExceeded, "universe exceeds " + std::to_string(opt.member_cap) + " members");
                capped = true;
            }
        }
        processed = end;
        ++u.rounds;
        u.log.push_back(round_note(u.rounds, u.members.size() - before, u.members.size(), u.discarded));
    }
    if (capped)
        u.log.push_back("stopped at the member cap of " + std::to_string(opt.member_cap));

    u.saturated["summands"] = !capped;
    if (opt.rules & RuleSyzygy)
        u.saturated["syzygy"] = !capped;
    if (opt.rules & RuleCosyzygy)
        u.saturated["cosyzygy"] = !capped;
    if (opt.rules & RuleExtensions)
        u.saturated["extensions"] = !capped;
    return u;
}

bool mult_bound_stable(const Universe& u, const UniverseOptions& opt)
{
    auto next = opt;
    next.mult_bound = u.mult_bound + 1;
    next.dim_bound = u.dim_bound;
    return generate_universe(u.algebra, next).members.same_members(u.members);
}

// ---------------------------------------------------------------- bullet

namespace {

// Calls visit(counts, total) for every multiset over the weighted items with
// 1 <= total weight <= cap and counts[i] <= limit.
void for_each_multiset(const std::vector<int>& weights, int cap, int limit, const std::function<void(const std::vector<int>&, int)>& visit)
{
    std::vector<int> counts(weights.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int total) {
        if (i == weights.size()) {
            if (total > 0)
                visit(counts, total);
            return;
        }
        for (int c = 0; c <= limit && total + c * weights[i] <= cap; ++c) {
            counts[i] = c;
            rec(i + 1, total + c * weights[i]);
        }
        counts[i] = 0;
    };
    rec(0, 0);
}

struct BulletJob {
    std::vector<int> b;   // per X candidate
    std::vector<int> a;   // per Y candidate
};

} // namespace

AddCat bullet(const Universe& u, const AddCat& s1, const AddCat& s2, const BulletOptions& opt)
{
    const AlgebraPtr& alg = u.algebra;
    const Field f = alg->field();
    const int d = u.dim_bound;
    AddCat out(alg);
    auto add = [&](const Representation& m) {
        auto idx = u.members.find(m);
        out.insert(idx ? u.members[*idx] : m);
    };
    for (const auto& m : s1.members())
        add(m);
    for (const auto& m : s2.members())
        add(m);
    if (s1.empty() || s2.empty())
        return out;

    const auto reach = positive_reach(*alg);
    const int nx = s2.size(), ny = s1.size();
    std::vector<PresentationPtr> pres(nx);
    std::vector<std::vector<ExtSpace>> ext(nx, std::vector<ExtSpace>(ny));
    run_tasks(
        static_cast<std::size_t>(nx),
        [&](std::size_t i) {
            pres[i] = std::make_shared<ProjectivePresentation>(projective_cover(s2[static_cast<int>(i)]));
            for (int j = 0; j < ny; ++j)
                if (s2[static_cast<int>(i)].total_dim() + s1[j].total_dim() <= d && may_extend(reach, s2[static_cast<int>(i)], s1[j]))
                    ext[i][j] = ext1_space(pres[i], s1[j]);
        },
        opt.parallel);

    std::vector<int> xi, yj;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (ext[i][j].dimension > 0) {
                xi.push_back(i);
                break;
            }
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (ext[i][j].dimension > 0) {
                yj.push_back(j);
                break;
            }
    if (xi.empty())
        return out;

    std::vector<int> xw, yw;
    for (int i : xi)
        xw.push_back(s2[i].total_dim());
    for (int j : yj)
        yw.push_back(s1[j].total_dim());
    const int ymin = *std::min_element(yw.begin(), yw.end());

    std::vector<BulletJob> jobs;
    std::uint64_t classes = 0;
    const auto p = f.characteristic();
    for_each_multiset(xw, d - ymin, d, [&](const std::vector<int>& b, int tx) {
        for_each_multiset(yw, d - tx, opt.mult_bound, [&](const std::vector<int>& a, int) {
            std::uint64_t count = 1;
            for (std::size_t s = 0; s < xi.size(); ++s) {
                if (b[s] == 0)
                    continue;
                int e = 0;
                for (std::size_t t = 0; t < yj.size(); ++t)
                    e += a[t] * ext[xi[s]][yj[t]].dimension;
                if (e < b[s])
                    return;
                const auto c = subspace_count(p, e, b[s]);
                count = (c != 0 && count > std::numeric_limits<std::uint64_t>::max() / c) ? std::numeric_limits<std::uint64_t>::max() : count * c;
            }
            classes = count > std::numeric_limits<std::uint64_t>::max() - classes ? std::numeric_limits<std::uint64_t>::max() : classes + count;
            if (classes > opt.class_budget)
                throw SyzexError(ErrorCode::BudgetExceeded, "bullet extension classes exceed the class budget");
            jobs.push_back({b, a});
        });
    });

    std::vector<std::vector<Representation>> results(jobs.size());
    run_tasks(
        jobs.size(),
        [&](std::size_t t) {
            const auto& job = jobs[t];
            std::vector<PresentationPtr> xs;
            std::vector<std::pair<int, int>> xcopy;   // (candidate, copy)
            for (std::size_t s = 0; s < xi.size(); ++s)
                for (int c = 0; c < job.b[s]; ++c) {
                    xs.push_back(pres[xi[s]]);
                    xcopy.emplace_back(static_cast<int>(s), c);
                }
            std::vector<Representation> ys;
            std::vector<int> ycand;
            for (std::size_t r = 0; r < yj.size(); ++r)
                for (int c = 0; c < job.a[r]; ++c) {
                    ys.push_back(s1[yj[r]]);
                    ycand.push_back(static_cast<int>(r));
                }
            // offsets[s][y copy] into the coordinates of V_s
            std::vector<std::vector<int>> offsets(xi.size(), std::vector<int>(ys.size(), 0));
            std::vector<int> vdim(xi.size(), 0);
            for (std::size_t s = 0; s < xi.size(); ++s)
                for (std::size_t c = 0; c < ys.size(); ++c) {
                    offsets[s][c] = vdim[s];
                    vdim[s] += ext[xi[s]][yj[ycand[c]]].dimension;
                }
            std::vector<int> active;
            for (std::size_t s = 0; s < xi.size(); ++s)
                if (job.b[s] > 0)
                    active.push_back(static_cast<int>(s));
            std::vector<Matrix> chosen(xi.size());
            std::function<void(std::size_t)> rec = [&](std::size_t k) {
                if (k == active.size()) {
                    std::vector<std::vector<Hom>> blocks(xs.size(), std::vector<Hom>(ys.size()));
                    for (std::size_t r = 0; r < xs.size(); ++r) {
                        const auto [s, copy] = xcopy[r];
                        for (std::size_t c = 0; c < ys.size(); ++c) {
                            const auto& e = ext[xi[s]][yj[ycand[c]]];
                            if (e.dimension > 0)
                                blocks[r][c] = combination(f, e, chosen[s], copy, offsets[s][c]);
                        }
                    }
                    for (auto& m : summands(glue(alg, xs, ys, blocks)))
                        results[t].push_back(std::move(m));
                    return;
                }
                const int s = active[k];
                for_each_subspace(f, vdim[s], job.b[s], [&](const Matrix& w) {
                    chosen[s] = w;
                    rec(k + 1);
                });
            };
            rec(0);
        },
        opt.parallel);

    for (const auto& batch : results)
        for (const auto& m : batch)
            add(m);
    return out;
}

AddCat layer(const Universe& u, const AddCat& t, int n, const BulletOptions& opt)
{
    if (n <= 0 || t.empty())
        return AddCat(u.algebra);
    AddCat l = bullet(u, AddCat(u.algebra), t, opt);
    for (int k = 2; k <= n; ++k)
        l = bullet(u, t, l, opt);
    return l;
}

Containment bounded_containment(const Universe& u, const AddCat& c, const AddCat& t, int n, const BulletOptions& opt)
{
    const auto l = layer(u, t, n, opt);
    for (const auto& m : c.members())
        if (!l.find(m))
            return {false, m};
    return {};
}

// ---------------------------------------------------------------- syzygy categories

AddCat syzygy_category(const Universe& u, int n)
{
    if (n == 0)
        return u.members.sorted();
    AddCat c(u.algebra);
    for (int v = 0; v < u.algebra->vertex_count(); ++v)
        c.insert(projective(u.algebra, v));
    for (const auto& m : u.members.members())
        for (const auto& s : summands(syzygy(m, n)))
            c.insert(s);
    return c.sorted();
}

AddCat syzygy_category(const AlgebraPtr& a, int n, int d)
{
    UniverseOptions opt;
    opt.dim_bound = d;
    return syzygy_category(generate_universe(a, opt), n);
}

// ---------------------------------------------------------------- Tits form

const char* to_string(TitsClass t)
{
    switch (t) {
    case TitsClass::Dynkin:
        return "dynkin";
    case TitsClass::Euclidean:
        return "euclidean";
    case TitsClass::Wild:
        return "wild";
    case TitsClass::NotHereditary:
        return "not-hereditary";
    }
    return "?";
}

std::vector<std::vector<long long>> tits_matrix(const PathAlgebra& a)
{
    const int n = a.vertex_count();
    std::vector<std::vector<long long>> b(n, std::vector<long long>(n, 0));
    for (int v = 0; v < n; ++v)
        b[v][v] = 2;
    for (const auto& ar : a.quiver().arrows()) {
        if (ar.source == ar.target) {
            b[ar.source][ar.source] -= 2;
        } else {
            b[ar.source][ar.target] -= 1;
            b[ar.target][ar.source] -= 1;
        }
    }
    return b;
}

namespace {

// Fraction-free symmetric elimination. Returns Dynkin when positive
// definite, Euclidean when positive semidefinite and singular, else Wild.
TitsClass classify_form(std::vector<std::vector<long long>> m)
{
    const int n = static_cast<int>(m.size());
    std::vector<bool> done(n, false);
    __int128 prev = 1;
    bool singular = false;
    for (int k = 0; k < n; ++k) {
        const long long piv = m[k][k];
        if (piv < 0)
            return TitsClass::Wild;
        if (piv == 0) {
            for (int j = k + 1; j < n; ++j)
                if (m[k][j] != 0)
                    return TitsClass::Wild;
            singular = true;
            continue;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = static_cast<long long>((static_cast<__int128>(piv) * m[i][j] - static_cast<__int128>(m[i][k]) * m[k][j]) / prev);
        prev = piv;
    }
    return singular ? TitsClass::Euclidean : TitsClass::Dynkin;
}

} // namespace

TitsClass tits_classification(const PathAlgebra& a)
{
    if (a.has_relations())
        return TitsClass::NotHereditary;
    const auto b = tits_matrix(a);
    const int n = a.vertex_count();
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v)
        comp[v] = v;
    std::function<int(int)> root = [&](int v) { return comp[v] == v ? v : comp[v] = root(comp[v]); };
    for (const auto& ar : a.quiver().arrows())
        comp[root(ar.source)] = root(ar.target);
    TitsClass worst = TitsClass::Dynkin;
    std::set<int> roots;
    for (int v = 0; v < n; ++v)
        roots.insert(root(v));
    for (int r : roots) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (root(v) == r)
                vs.push_back(v);
        std::vector<std::vector<long long>> sub(vs.size(), std::vector<long long>(vs.size()));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j)
                sub[i][j] = b[vs[i]][vs[j]];
        const auto c = classify_form(sub);
        if (static_cast<int>(c) > static_cast<int>(worst))
            worst = c;
    }
    return worst;
}

// ---------------------------------------------------------------- representation type

const char* to_string(RepTypeCertificate::Verdict v)
{
    switch (v) {
    case RepTypeCertificate::Verdict::Finite:
        return "finite";
    case RepTypeCertificate::Verdict::Infinite:
        return "infinite";
    case RepTypeCertificate::Verdict::Unknown:
        return "unknown";
    }
    return "?";
}

const char* to_string(RepTypeCertificate::Method m)
{
    switch (m) {
    case RepTypeCertificate::Method::TitsForm:
        return "tits-form";
    case RepTypeCertificate::Method::Enumeration:
        return "enumeration";
    case RepTypeCertificate::Method::HeuristicCount:
        return "heuristic-count";
    case RepTypeCertificate::Method::None:
        return "none";
    }
    return "?";
}

namespace {

std::string dims_string(const DimensionVector& d)
{
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

RepTypeCertificate tits_certificate(const PathAlgebra& a, int d)
{
    RepTypeCertificate c;
    c.dim_bound = d;
    c.method = RepTypeCertificate::Method::TitsForm;
    c.certified = true;
    const auto t = tits_classification(a);
    c.verdict = t == TitsClass::Dynkin ? RepTypeCertificate::Verdict::Finite : RepTypeCertificate::Verdict::Infinite;
    std::ostringstream os;
    os << "hereditary; symmetrized Tits form [";
    const auto b = tits_matrix(a);
    for (std::size_t i = 0; i < b.size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < b.size(); ++j)
            os << (j ? " " : "") << b[i][j];
    }
    os << "] is " << (t == TitsClass::Dynkin ? "positive definite (dynkin)" : t == TitsClass::Euclidean ? "positive semidefinite, singular (euclidean)" : "indefinite (wild)");
    c.witness = os.str();
    return c;
}

} // namespace

RepTypeCertificate rep_type_certificate(const Universe& u)
{
    if (!u.algebra->has_relations())
        return tits_certificate(*u.algebra, u.dim_bound);
    RepTypeCertificate c;
    c.dim_bound = u.dim_bound;
    const int maxdim = u.members.max_member_dim();
    if (u.fully_saturated() && u.discarded == 0 && maxdim < u.dim_bound) {
        c.verdict = RepTypeCertificate::Verdict::Finite;
        c.method = RepTypeCertificate::Method::Enumeration;
        c.certified = true;
        c.members = u.members.sorted().members();
        c.witness = std::to_string(u.members.size()) + " indecomposables, closure saturated with no candidate above dimension " +
                    std::to_string(u.dim_bound) + " and largest member of dimension " + std::to_string(maxdim);
        return c;
    }
    std::map<DimensionVector, int> counts;
    for (const auto& m : u.members.members())
        ++counts[m.dims];
    auto best = std::max_element(counts.begin(), counts.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    if (best != counts.end() && best->second >= heuristic_threshold) {
        c.verdict = RepTypeCertificate::Verdict::Infinite;
        c.method = RepTypeCertificate::Method::HeuristicCount;
        c.certified = false;
        c.witness = std::to_string(best->second) + " pairwise non-isomorphic indecomposables with dimension vector " + dims_string(best->first);
        c.notes.push_back("heuristic: a large family in one dimension vector suggests infinite type but is not a proof");
        return c;
    }
    c.notes.push_back("closure not saturated within dimension " + std::to_string(u.dim_bound) + " (" + std::to_string(u.discarded) +
                      " candidates discarded, largest member of dimension " + std::to_string(maxdim) + ")");
    return c;
}

RepTypeCertificate rep_type_certificate(const AlgebraPtr& a, int d, const UniverseOptions& base)
{
    if (!a->has_relations())
        return tits_certificate(*a, d);
    auto opt = base;
    opt.dim_bound = d;
    return rep_type_certificate(generate_universe(a, opt));
}

SyzygyFiniteCertificate syzygy_finite_certificate(const Universe& u, const Universe& smaller, int n)
{
    SyzygyFiniteCertificate c;
    c.n = n;
    c.category = syzygy_category(u, n);
    bool closed = true;
    for (const auto& m : c.category.members()) {
        for (const auto& s : summands(syzygy(m, 1)))
            if (!c.category.find(s)) {
                closed = false;
                c.notes.push_back("syzygy of a member leaves the category (dimension vector " + dims_string(s.dims) + ")");
                break;
            }
        if (!closed)
            break;
    }
    const int maxdim = c.category.max_member_dim();
    const bool below = maxdim < u.dim_bound;
    if (!below)
        c.notes.push_back("a member has dimension " + std::to_string(maxdim) + ", not below the window " + std::to_string(u.dim_bound));
    const auto small = syzygy_category(smaller, n);
    const bool stable = small.same_members(c.category);
    if (!stable)
        c.notes.push_back("the category at dimension " + std::to_string(smaller.dim_bound) + " has " + std::to_string(small.size()) + " members, at " +
                          std::to_string(u.dim_bound) + " it has " + std::to_string(c.category.size()));
    c.holds = closed && below && stable;
    if (c.holds)
        c.notes.push_back("Omega^" + std::to_string(n) + " category has " + std::to_string(c.category.size()) + " members, closed under syzygy, stable from dimension " +
                          std::to_string(smaller.dim_bound) + " to " + std::to_string(u.dim_bound));
    return c;
}

// ---------------------------------------------------------------- ed engine

namespace {

constexpr int unbounded = std::numeric_limits<int>::max();

const char* citation_for(const std::string& rule)
{
    if (rule == "R1")
        return "ed A-mod = 0 exactly when A is representation-finite";
    if (rule == "R2")
        return "ed A-mod <= LL(A) - 1";
    if (rule == "R3")
        return "ed A-mod <= gldim A";
    if (rule == "R4")
        return "ed Omega^i(A-mod) <= LL(A) - 2 for i >= 1";
    if (rule == "R5")
        return "Omega^{i+1}(A-mod) lies in Omega^i(A-mod), so ed is nonincreasing in i";
    if (rule == "R6")
        return "ed Omega^{m-j}(A-mod) <= ed Omega^m(A-mod) + j";
    if (rule == "R7")
        return "Omega^i(A-mod) = proj A for i >= gldim A; ed Omega^i(A-mod) <= gldim A - i";
    if (rule == "R8")
        return "Omega^n(A-mod) of finite type gives ed Omega^i(A-mod) = 0 for i >= n";
    return "";
}

std::string describe(const char* side, int i, const EdBound& b)
{
    return std::string(side) + " ed Omega^" + std::to_string(i) + " = " + std::to_string(b.value) + " [" + b.rule + "]";
}

class Engine {
public:
    explicit Engine(int n) : lower_(n), upper_(n)
    {
        for (auto& b : lower_) {
            b.value = 0;
            b.rule = "R1";
            b.citation = "ed is a nonnegative integer";
        }
        for (auto& b : upper_) {
            b.value = unbounded;
            b.rule = "none";
        }
    }

    int size() const { return static_cast<int>(lower_.size()); }

    bool raise(int i, int v, const std::string& rule, const std::string& cite, std::vector<std::string> premises)
    {
        if (i < 0 || i >= size() || v <= lower_[i].value)
            return false;
        lower_[i] = {v, rule, cite, std::move(premises)};
        check(i);
        return true;
    }

    bool cut(int i, int v, const std::string& rule, const std::string& cite, std::vector<std::string> premises)
    {
        if (i < 0 || i >= size() || v >= upper_[i].value)
            return false;
        upper_[i] = {std::max(v, 0), rule, cite, std::move(premises)};
        check(i);
        return true;
    }

    void fixpoint()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < size(); ++i) {
                if (upper_[i].value != unbounded)
                    changed |= cut(i + 1, upper_[i].value, "R5", citation_for("R5"), chain("upper", i, upper_[i]));
                changed |= raise(i, lower_[i + 1].value, "R5", citation_for("R5"), chain("lower", i + 1, lower_[i + 1]));
            }
            for (int m = 1; m < size(); ++m)
                for (int j = 1; j <= m; ++j) {
                    if (upper_[m].value != unbounded)
                        changed |= cut(m - j, upper_[m].value + j, "R6", citation_for("R6"), chain("upper", m, upper_[m]));
                    if (lower_[m - j].value - j > 0)
                        changed |= raise(m, lower_[m - j].value - j, "R6", citation_for("R6"), chain("lower", m - j, lower_[m - j]));
                }
        }
    }

    std::vector<EdInterval> intervals() const
    {
        std::vector<EdInterval> out;
        for (int i = 0; i < size(); ++i)
            out.push_back({i, lower_[i], upper_[i]});
        return out;
    }

private:
    static std::vector<std::string> chain(const char* side, int i, const EdBound& b)
    {
        std::vector<std::string> p{describe(side, i, b)};
        p.insert(p.end(), b.premises.begin(), b.premises.end());
        return p;
    }

    void check(int i) const
    {
        if (lower_[i].value > upper_[i].value)
            throw SyzexError(ErrorCode::ContradictoryFacts,
                             "lower bound " + std::to_string(lower_[i].value) + " exceeds upper bound " + std::to_string(upper_[i].value) + " at i = " + std::to_string(i),
                             {describe("lower", i, lower_[i]) + " (" + lower_[i].citation + ")", describe("upper", i, upper_[i]) + " (" + upper_[i].citation + ")"});
    }

    std::vector<EdBound> lower_;
    std::vector<EdBound> upper_;
};

} // namespace

std::vector<EdInterval> propagate_ed(const EdInputs& in)
{
    int n = std::max(in.max_index, 0);
    if (in.gldim)
        n = std::max(n, *in.gldim);
    if (in.syzygy_finite_from)
        n = std::max(n, *in.syzygy_finite_from);
    for (const auto& f : in.facts)
        n = std::max(n, f.i);
    Engine e(n + 2);

    const std::string ll = "LL(A) = " + std::to_string(in.loewy_length);
    if (in.infinite_type && *in.infinite_type)
        e.raise(0, 1, "R1", citation_for("R1"), {"A is representation-infinite"});
    if (in.finite_type)
        e.cut(0, 0, "R1", citation_for("R1"), {"A is representation-finite"});
    if (in.gldim) {
        const int g = *in.gldim;
        const std::string gd = "gldim A = " + std::to_string(g);
        e.cut(0, g, "R3", citation_for("R3"), {gd});
        for (int i = 1; i < e.size(); ++i)
            e.cut(i, std::max(g - i, 0), "R7", citation_for("R7"), {gd});
    }
    if (in.syzygy_finite_from) {
        const int s = *in.syzygy_finite_from;
        for (int i = s; i < e.size(); ++i)
            e.cut(i, 0, "R8", citation_for("R8"), {"Omega^" + std::to_string(s) + "(A-mod) has finitely many indecomposables"});
    }
    e.cut(0, in.loewy_length - 1, "R2", citation_for("R2"), {ll});
    if (in.loewy_length >= 2)
        for (int i = 1; i < e.size(); ++i)
            e.cut(i, in.loewy_length - 2, "R4", citation_for("R4"), {ll});
    for (const auto& f : in.facts) {
        const std::string premise = "external " + f.kind + " " + std::to_string(f.value) + " at i = " + std::to_string(f.i);
        if (f.kind == "exact" || f.kind == "lower")
            e.raise(f.i, f.value, "external", f.citation, {premise});
        if (f.kind == "exact" || f.kind == "upper")
            e.cut(f.i, f.value, "external", f.citation, {premise});
    }
    e.fixpoint();
    return e.intervals();
}

EdReport ed_report(const AlgebraPtr& a, const EdOptions& opt)
{
    EdReport r;
    r.loewy_length = a->nil_degree();
    r.gldim = gldim_bounded(a, opt.pd_bound < 0 ? default_dimension_bound(*a) : opt.pd_bound);
    r.tits = tits_classification(*a);

    int max_index = 0;
    for (int i : opt.indices)
        max_index = std::max(max_index, i);

    EdInputs in;
    in.loewy_length = r.loewy_length;
    in.gldim = r.gldim.value;
    in.max_index = max_index;
    for (const auto& f : opt.facts) {
        if (f.algebra != opt.algebra_id) {
            r.warnings.push_back("fact for '" + f.algebra + "' ignored (algebra is '" + opt.algebra_id + "')");
            continue;
        }
        in.facts.push_back(f);
    }

    if (!a->has_relations()) {
        r.rep_type = tits_certificate(*a, opt.dim_bound);
    } else {
        UniverseOptions uo;
        uo.dim_bound = opt.dim_bound;
        uo.mult_bound = opt.mult_bound;
        uo.parallel = opt.parallel;
        uo.member_cap = opt.member_cap;
        uo.stop_at_cap = true;
        const auto u = generate_universe(a, uo);
        r.universe_members = u.members.size();
        r.universe_discarded = u.discarded;
        r.universe_saturated = u.fully_saturated();
        if (!r.universe_saturated)
            r.warnings.push_back("universe stopped at " + std::to_string(u.members.size()) + " members before saturating");
        else if (!mult_bound_stable(u, uo))
            r.warnings.push_back("new members appear at multiplicity bound " + std::to_string(opt.mult_bound + 1));
        r.rep_type = rep_type_certificate(u);
        if (opt.use_syzygy_certificate && r.gldim.exceeds() && opt.dim_bound > 2) {
            auto so = uo;
            so.dim_bound = opt.dim_bound - 2;
            const auto smaller = generate_universe(a, so);
            for (int n = 1; n <= std::max(1, max_index); ++n) {
                auto cert = syzygy_finite_certificate(u, smaller, n);
                if (cert.holds) {
                    r.syzygy_finite_from = n;
                    r.notes.insert(r.notes.end(), cert.notes.begin(), cert.notes.end());
                    break;
                }
            }
        }
    }
    in.syzygy_finite_from = r.syzygy_finite_from;
    if (r.rep_type.certified) {
        if (r.rep_type.verdict == RepTypeCertificate::Verdict::Infinite)
            in.infinite_type = true;
        if (r.rep_type.verdict == RepTypeCertificate::Verdict::Finite)
            in.finite_type = true;
    }
    if (r.rep_type.method == RepTypeCertificate::Method::HeuristicCount)
        r.notes.push_back("representation type looks infinite (" + r.rep_type.witness + ") but only certified results enter the bounds");

    const auto all = propagate_ed(in);
    std::set<int> seen;
    for (int i : opt.indices)
        if (i >= 0 && seen.insert(i).second)
            r.intervals.push_back(all[i]);
    for (const auto& iv : r.intervals)
        if (!iv.exact())
            r.notes.push_back("ed Omega^" + std::to_string(iv.i) + " is only bounded: [" + std::to_string(iv.lower.value) + ", " +
                              std::to_string(iv.upper.value) + "]");
    return r;
}

} // namespace syzex
