#pragma once

// Add-categories, the bullet operation, extension layers, closure-generated
// universes, syzygy categories, representation-type certificates and the
// extension-dimension bound engine.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syzex/homology.hpp"
#include "syzex/io.hpp"
#include "syzex/rep.hpp"

namespace syzex {

/// Iso-deduplicated list of indecomposables.
class AddCat {
public:
    AddCat() = default;
    explicit AddCat(AlgebraPtr a) : algebra_(std::move(a)) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Representation>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const Representation& operator[](int i) const { return members_[i]; }

    /// Index of the member isomorphic to the indecomposable m.
    std::optional<int> find(const Representation& m) const;
    /// Adds an indecomposable unless an isomorphic member exists; returns its index.
    int insert(const Representation& m, bool* added = nullptr);
    /// Replaces member i by an isomorphic module.
    void replace(int i, const Representation& m);
    /// True when every indecomposable summand of m is a member.
    bool contains(const Representation& m) const;
    /// Members in canonical order: total dimension, dimension vector, serialized form.
    AddCat sorted() const;
    bool same_members(const AddCat& other) const;
    int max_member_dim() const;

private:
    AlgebraPtr algebra_;
    std::vector<Representation> members_;
    std::map<std::string, std::vector<int>> buckets_;
};

AddCat make_addcat(const AlgebraPtr& a, const std::vector<Representation>& modules);
AddCat merge(const AddCat& x, const AddCat& y);

enum Rule : unsigned {
    RuleSummands = 1,
    RuleSyzygy = 2,
    RuleCosyzygy = 4,
    RuleExtensions = 8,
    AllRules = 15,
};

struct UniverseOptions {
    int dim_bound = 6;
    int mult_bound = 2;
    unsigned rules = AllRules;
    std::vector<Representation> seeds;   // empty: simples, projectives, injectives
    std::size_t member_cap = 5000;
    bool stop_at_cap = false;   // false: BudgetExceeded at the cap; true: return the unsaturated prefix
    std::uint64_t class_budget = 1u << 20;
    bool parallel = true;
};

struct Universe {
    AlgebraPtr algebra;
    int dim_bound = 0;
    int mult_bound = 0;
    unsigned rules = 0;
    AddCat members;
    std::vector<std::string> origin;        // per member: the generator that produced it
    std::vector<std::string> log;           // rounds and discarded candidates
    std::map<std::string, bool> saturated;  // per closure rule
    int discarded = 0;                      // candidates above the dimension bound
    int rounds = 0;

    bool fully_saturated() const;
    std::vector<PresentationPtr> presentations;
};

Universe generate_universe(const AlgebraPtr& a, const UniverseOptions& opt);
std::vector<Representation> default_seeds(const AlgebraPtr& a);
/// Reruns the closure at mult_bound + 1 and reports whether new members appear.
bool mult_bound_stable(const Universe& u, const UniverseOptions& opt);

/// Visits every r-dimensional subspace of GF(p)^n as an r x n matrix in
/// reduced row echelon form.
void for_each_subspace(const Field& f, int n, int r, const std::function<void(const Matrix&)>& visit);
/// Number of r-dimensional subspaces of GF(p)^n, saturating at UINT64_MAX.
std::uint64_t subspace_count(std::uint64_t p, int n, int r);

struct BulletOptions {
    int mult_bound = 2;
    std::uint64_t class_budget = 1u << 20;
    bool parallel = true;
};

/// add of the middle terms of 0 -> T1 -> X -> T2 -> 0 with T1 a sum of s1
/// members (each at most mult_bound times) and T2 a sum of s2 members,
/// dim T1 + dim T2 <= d. Summands isomorphic to universe members are
/// replaced by the universe representative.
AddCat bullet(const Universe& u, const AddCat& s1, const AddCat& s2, const BulletOptions& opt = {});
AddCat layer(const Universe& u, const AddCat& t, int n, const BulletOptions& opt = {});

struct Containment {
    bool holds = true;
    std::optional<Representation> counterexample;
};
Containment bounded_containment(const Universe& u, const AddCat& c, const AddCat& t, int n, const BulletOptions& opt = {});

/// Indecomposable summands of syzygy(M, n) over the universe members, plus
/// the indecomposable projectives; n = 0 gives the universe itself.
AddCat syzygy_category(const Universe& u, int n);
AddCat syzygy_category(const AlgebraPtr& a, int n, int d);

enum class TitsClass { Dynkin, Euclidean, Wild, NotHereditary };
const char* to_string(TitsClass t);
TitsClass tits_classification(const PathAlgebra& a);
/// Symmetrized Euler form matrix (twice the quadratic form).
std::vector<std::vector<long long>> tits_matrix(const PathAlgebra& a);

struct RepTypeCertificate {
    enum class Verdict { Finite, Infinite, Unknown };
    enum class Method { TitsForm, Enumeration, HeuristicCount, None };
    Verdict verdict = Verdict::Unknown;
    Method method = Method::None;
    bool certified = false;
    std::vector<Representation> members;
    std::string witness;
    int dim_bound = 0;
    std::vector<std::string> notes;
};
const char* to_string(RepTypeCertificate::Verdict v);
const char* to_string(RepTypeCertificate::Method m);

inline constexpr int heuristic_threshold = 20;

RepTypeCertificate rep_type_certificate(const AlgebraPtr& a, int d, const UniverseOptions& base = {});
RepTypeCertificate rep_type_certificate(const Universe& u);

struct SyzygyFiniteCertificate {
    int n = 0;
    bool holds = false;
    AddCat category;
    std::vector<std::string> notes;
};
/// Omega^n(A-mod) at window d: closed under syzygy, every member of dimension
/// below d, and identical to the category computed at d - 2.
SyzygyFiniteCertificate syzygy_finite_certificate(const Universe& u, const Universe& smaller, int n);

struct EdBound {
    int value = 0;
    std::string rule;
    std::string citation;
    std::vector<std::string> premises;
};

struct EdInterval {
    int i = 0;
    EdBound lower;
    EdBound upper;
    bool exact() const { return lower.value == upper.value; }
};

struct EdOptions {
    std::vector<int> indices{0};
    std::string algebra_id;
    std::vector<ExternalFact> facts;
    int dim_bound = 6;
    int mult_bound = 2;
    int pd_bound = -1;   // -1: 2 dim A
    std::size_t member_cap = 1000;
    bool use_syzygy_certificate = true;
    bool parallel = true;
};

struct EdReport {
    std::vector<EdInterval> intervals;
    RepTypeCertificate rep_type;
    TitsClass tits = TitsClass::NotHereditary;
    Bounded gldim;
    int loewy_length = 0;
    std::optional<int> syzygy_finite_from;
    int universe_members = 0;        // 0 for hereditary input (no universe needed)
    int universe_discarded = 0;
    bool universe_saturated = false;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
};

EdReport ed_report(const AlgebraPtr& a, const EdOptions& opt);

/// Fixpoint propagation with explicit inputs; used by ed_report and tests.
struct EdInputs {
    int loewy_length = 1;
    std::optional<int> gldim;
    std::optional<bool> infinite_type;   // certified only
    bool finite_type = false;
    std::optional<int> syzygy_finite_from;
    std::vector<ExternalFact> facts;
    int max_index = 0;
};
std::vector<EdInterval> propagate_ed(const EdInputs& in);

} // namespace syzex
