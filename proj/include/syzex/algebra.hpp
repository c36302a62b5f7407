#pragma once

// Finite-dimensional path algebras kQ/I over GF(p) with length-homogeneous
// relations. Paths are written source-to-target: the arrow list a1 a2 ... ak
// with target(a_i) == source(a_{i+1}).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "syzex/linalg.hpp"

namespace syzex {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::string& label(int v) const { return vertices_[v]; }

    std::optional<int> vertex_index(const std::string& label) const;
    std::optional<int> arrow_index(const std::string& name) const;

    Quiver reversed() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_lookup_;
    std::map<std::string, int> arrow_lookup_;
};

using Path = std::vector<int>;   // arrow indices, source-to-target

struct PathTerm {
    Scalar coeff = 0;
    Path path;
};

struct Relation {
    std::vector<PathTerm> terms;
    int length() const { return terms.empty() ? 0 : static_cast<int>(terms.front().path.size()); }
};

/// The on-disk algebra description (see docs/formats.md).
struct AlgebraSpec {
    struct ArrowSpec {
        std::string name;
        std::string from;
        std::string to;
        friend bool operator==(const ArrowSpec&, const ArrowSpec&) = default;
    };
    struct TermSpec {
        std::int64_t coeff = 1;
        std::vector<std::string> path;
        friend bool operator==(const TermSpec&, const TermSpec&) = default;
    };
    std::uint32_t field = 2;
    std::vector<std::string> vertices;
    std::vector<ArrowSpec> arrows;
    std::vector<std::vector<TermSpec>> relations;
    std::string comment;   // free text; ignored by the builder

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

struct BuildOptions {
    int path_length_cap = 30;
};

using DimensionVector = std::vector<int>;

int total(const DimensionVector& d);

/// Sparse vector over the algebra basis.
using BasisCombination = std::vector<std::pair<int, Scalar>>;

struct BasisPath {
    Path arrows;
    int source = 0;
    int target = 0;
    int length() const { return static_cast<int>(arrows.size()); }
};

class PathAlgebra : public std::enable_shared_from_this<PathAlgebra> {
public:
    const Quiver& quiver() const { return quiver_; }
    Field field() const { return field_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const AlgebraSpec& spec() const { return spec_; }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisPath>& basis() const { return basis_; }
    int vertex_count() const { return quiver_.vertex_count(); }
    int arrow_count() const { return quiver_.arrow_count(); }

    /// Least N with rad^N = 0; equal to the Loewy length.
    int nil_degree() const { return nil_degree_; }
    bool is_semisimple() const { return nil_degree_ <= 1; }
    bool has_relations() const { return !relations_.empty(); }

    /// Basis indices of residue paths from `source` to `target`, in basis order.
    const std::vector<int>& paths_between(int source, int target) const
    {
        return between_[static_cast<std::size_t>(source) * vertex_count() + target];
    }
    /// Index of the trivial path at v.
    int trivial_path(int v) const { return trivial_[v]; }

    /// Normal form of (basis path b) followed by arrow a; empty when b and a
    /// do not compose or the product vanishes.
    const BasisCombination& right_arrow(int b, int a) const
    {
        return right_arrow_[static_cast<std::size_t>(b) * arrow_count() + a];
    }

    /// Normal form of an arbitrary path (arrow list, source-to-target) that
    /// starts at `start`.
    BasisCombination reduce(int start, const Path& path) const;

    /// Product of basis elements: b1 followed by b2.
    BasisCombination multiply(int b1, int b2) const;

    /// Structure constants on the whole basis, row-major [b1 * dim + b2].
    const std::vector<BasisCombination>& mult_table() const;

    std::shared_ptr<const PathAlgebra> opposite() const;

    /// Structural identity: same field, quiver and relations.
    const std::string& fingerprint() const { return fingerprint_; }

    std::string describe_path(const Path& p, int start) const;

private:
    friend std::shared_ptr<const PathAlgebra> build_algebra(const AlgebraSpec&, const BuildOptions&);
    PathAlgebra() = default;

    Quiver quiver_;
    Field field_;
    AlgebraSpec spec_;
    BuildOptions options_;
    std::vector<Relation> relations_;
    std::vector<BasisPath> basis_;
    std::vector<int> trivial_;
    std::vector<std::vector<int>> between_;
    std::vector<BasisCombination> right_arrow_;
    int nil_degree_ = 1;
    std::string fingerprint_;

    mutable std::once_flag mult_once_;
    mutable std::vector<BasisCombination> mult_table_;

    mutable std::mutex opposite_mutex_;
    mutable std::shared_ptr<const PathAlgebra> opposite_strong_;
    mutable std::weak_ptr<const PathAlgebra> opposite_weak_;
};

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

AlgebraPtr build_algebra(const AlgebraSpec& spec, const BuildOptions& options = {});

/// Loewy length ll(A).
int loewy_length(const PathAlgebra& a);

/// The algebra spec with all arrows and relation paths reversed.
AlgebraSpec opposite_spec(const AlgebraSpec& spec);

bool same_algebra(const PathAlgebra& a, const PathAlgebra& b);

} // namespace syzex
