#pragma once

// Finite-dimensional left modules as quiver representations.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzex/algebra.hpp"

namespace syzex {

/// One matrix per arrow; action[a] has dims[target(a)] rows and
/// dims[source(a)] columns.
struct Representation {
    AlgebraPtr algebra;
    DimensionVector dims;
    std::vector<Matrix> action;

    int total_dim() const { return total(dims); }
    bool is_zero() const { return total_dim() == 0; }
    Field field() const { return algebra->field(); }
};

/// Vertex-indexed linear maps; maps[v] is N_v x M_v for a map M -> N.
struct Hom {
    std::vector<Matrix> maps;
};

Representation zero_module(const AlgebraPtr& a);
Representation simple(const AlgebraPtr& a, int v);
Representation projective(const AlgebraPtr& a, int v);
Representation injective(const AlgebraPtr& a, int v);
/// The left regular module, as the sum of the projectives in vertex order.
Representation regular_module(const AlgebraPtr& a);

/// D(M) = Hom_k(M, k), a module over the opposite algebra.
Representation duality(const Representation& m);
Hom duality(const Hom& f);

Representation direct_sum(const Representation& m, const Representation& n);
Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts);
Representation power(const Representation& m, int k);

/// Matrix by which a path (source-to-target arrow list) acts.
Matrix path_matrix(const Representation& m, const Path& p, int start);

/// Shape and relation violations; empty means valid.
std::vector<std::string> validate(const Representation& m);

Hom zero_hom(const Representation& from, const Representation& to);
Hom identity_hom(const Representation& m);
/// g after f.
Hom compose(const Hom& g, const Hom& f);
Hom add(const Hom& f, const Hom& g);
Hom scale(const Hom& f, Scalar s);
bool is_zero(const Hom& f);
bool is_homomorphism(const Hom& f, const Representation& from, const Representation& to);
bool is_injective(const Hom& f);
bool is_surjective(const Hom& f, const Representation& to);
bool is_isomorphism(const Hom& f, const Representation& from, const Representation& to);
bool is_nilpotent(const Hom& f, int bound);

/// A module together with a structure map (inclusion or projection).
struct SubQuotient {
    Representation module;
    Hom map;
};

/// Submodule spanned vertexwise by the columns of bases[v]; the columns
/// must be independent and the span closed under the action.
SubQuotient submodule(const Representation& m, const std::vector<Matrix>& bases);
/// Quotient by the submodule spanned by the columns of spans[v].
SubQuotient quotient(const Representation& m, const std::vector<Matrix>& spans);
SubQuotient kernel(const Hom& f, const Representation& from);
SubQuotient cokernel(const Hom& f, const Representation& to);
SubQuotient image(const Hom& f, const Representation& from, const Representation& to);

struct HomBasis {
    Representation source;
    Representation target;
    std::vector<Hom> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

HomBasis hom_space(const Representation& m, const Representation& n);

/// Flattened coordinates of a hom, vertex by vertex, row-major.
Vec flatten(const Hom& f);
Hom unflatten(const Vec& v, const Representation& from, const Representation& to);

enum class IsoAnswer { Yes, No, Unknown };
const char* to_string(IsoAnswer a);

/// Exact isomorphism test via Krull-Schmidt. Returns Unknown only when a
/// decomposition could not certify locality of some factor.
IsoAnswer is_iso(const Representation& m, const Representation& n);
/// Isomorphism test for modules already known to be indecomposable.
bool is_iso_indecomposable(const Representation& m, const Representation& n);
/// Search for an invertible element of Hom(M, N): exhaustive when p^k is
/// within budget, otherwise seeded random sampling with a retry cap.
IsoAnswer is_iso_search(const Representation& m, const Representation& n,
                        std::uint64_t budget = 1u << 16, std::uint64_t seed = 0);

struct DecomposeOptions {
    std::uint64_t seed = 0;
    std::uint64_t locality_budget = 1u << 16;
};

struct Decomposition {
    std::vector<std::pair<Representation, int>> factors;
    /// False when some factor's locality could not be certified within budget.
    bool certified = true;

    int factor_count() const;
};

Decomposition decompose(const Representation& m, const DecomposeOptions& opt = {});
/// The indecomposable summands with repetition, in canonical order.
std::vector<Representation> summands(const Representation& m, const DecomposeOptions& opt = {});
bool is_indecomposable(const Representation& m);

struct TopRadical {
    Representation top;
    Representation rad;
    Hom projection;   // M -> top
    Hom inclusion;    // rad -> M
};
TopRadical top_and_radical(const Representation& m);

/// dim of the socle at each vertex.
DimensionVector socle_dims(const Representation& m);

/// Byte string used for canonical ordering: dims, then arrow matrices.
std::string serialize(const Representation& m);
bool canonical_less(const Representation& a, const Representation& b);

/// Cheap isomorphism invariants used to bucket candidates.
std::string invariant_key(const Representation& m);

bool is_projective(const Representation& m);

} // namespace syzex
