#pragma once

// Projective covers, syzygies, Ext^1 via Hom(syzygy, -) and tilting checks.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzex/rep.hpp"

namespace syzex {

/// 0 -> kernel -> cover -> module -> 0 with cover a projective cover.
struct ProjectivePresentation {
    Representation module;
    std::vector<int> summand_vertices;   // cover = sum of P(v) in this order
    Representation cover;
    Hom epi;
    Representation kernel;
    Hom inclusion;
};
using PresentationPtr = std::shared_ptr<const ProjectivePresentation>;

ProjectivePresentation projective_cover(const Representation& m);
/// Direct sum of presentations, with covers and kernels summed in order.
ProjectivePresentation direct_sum(const AlgebraPtr& a, const std::vector<PresentationPtr>& parts);

/// Minimal syzygy; syzygy(M, 0) = M.
Representation syzygy(const Representation& m, int n);
/// D(syzygy(D(M), n)) over the opposite algebra.
Representation cosyzygy(const Representation& m, int n);

/// A value that is either known to be at most `bound` or exceeds it.
struct Bounded {
    std::optional<int> value;
    int bound = 0;
    bool exceeds() const { return !value.has_value(); }
    std::string str() const;
};

Bounded pd_bounded(const Representation& m, int bound);
Bounded id_bounded(const Representation& m, int bound);
Bounded gldim_bounded(const AlgebraPtr& a, int bound);
/// 2 dim A, the default bound for pd and gldim.
int default_dimension_bound(const PathAlgebra& a);

struct ExtClass {
    Representation x;
    Representation y;
    PresentationPtr presentation;   // of x
    Hom cocycle;                    // kernel(presentation) -> y
};

struct ExtSpace {
    Representation x;
    Representation y;
    PresentationPtr presentation;
    int dimension = 0;
    std::vector<Hom> basis;   // cocycles spanning a complement of the extendable homs
};

ExtSpace ext1_space(const Representation& x, const Representation& y);
ExtSpace ext1_space(const PresentationPtr& px, const Representation& y);

/// The class sum_i coeffs[i] * basis[i].
ExtClass ext_class(const ExtSpace& e, const Vec& coeffs);
/// All p^dim classes; BudgetExceeded when p^dim exceeds the budget.
std::vector<ExtClass> enumerate_ext_classes(const ExtSpace& e, std::uint64_t budget = 1u << 20);

struct Extension {
    Representation middle;
    Hom mono;   // y -> middle
    Hom epi;    // middle -> x
};

/// Pushout of cover <- kernel -> y along the cocycle.
Extension extension_middle(const ExtClass& c);
/// True when 0 -> y -> middle -> x -> 0 is exact.
bool is_short_exact(const Extension& e, const Representation& y, const Representation& x);

struct TiltingVerdict {
    bool is_tilting = false;
    Bounded pd;
    int failed_condition = 0;   // 0 when tilting
    std::vector<std::string> failures;
};

TiltingVerdict tilting_check(const Representation& t, int bound);

} // namespace syzex
