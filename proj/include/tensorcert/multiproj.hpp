#pragma once

#include "tensorcert/exact_linalg.hpp"
#include "tensorcert/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tensorcert {

class FactorSubset;

/// Projective dimensions (n_1, ..., n_k) of P^{n_1} x ... x P^{n_k}.
class MultiShape {
public:
    MultiShape() = default;
    explicit MultiShape(std::vector<int> dims);

    /// From affine factor sizes d_i = n_i + 1 (the instance-file convention).
    static MultiShape from_sizes(std::span<const int> sizes);

    int order() const { return static_cast<int>(dims_.size()); }
    int dim(int factor) const { return dims_[static_cast<std::size_t>(factor)]; }
    int size(int factor) const { return dim(factor) + 1; }
    const std::vector<int>& dims() const { return dims_; }
    std::vector<int> sizes() const;

    /// Product of (n_i + 1) over the factors in u.
    Index ambient_size(const FactorSubset& u) const;
    /// M + 1, the number of coordinates of a tensor of this shape.
    Index ambient_size() const;
    Index projective_dim() const { return ambient_size() - 1; }
    int max_dim() const;
    int min_dim() const;

    bool operator==(const MultiShape&) const = default;

    std::string to_string() const;

private:
    std::vector<int> dims_;
};

/// Nonempty, strictly increasing set of factor indices. Stored 0-based;
/// printed and parsed 1-based.
class FactorSubset {
public:
    FactorSubset() = default;
    FactorSubset(std::vector<int> members, int order);

    static FactorSubset full(int order);
    /// Parses "1,2" (1-based).
    static FactorSubset parse(std::string_view text, int order);
    /// Members of the bitmask (bit i = factor i).
    static FactorSubset from_mask(unsigned mask, int order);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int factor) const;
    unsigned mask() const;
    /// Factors not in this subset; nullopt when that set is empty.
    std::optional<FactorSubset> complement(int order) const;

    bool operator==(const FactorSubset&) const = default;

    std::string to_string() const;

private:
    std::vector<int> members_;
};

/// Bipartition E ⊔ F of the factors; both parts nonempty.
struct FactorPartition {
    FactorSubset E;
    FactorSubset F;

    static FactorPartition from_F(const FactorSubset& F, int order);
    /// Parses "1,2/3" as E = {1,2}, F = {3}.
    static FactorPartition parse(std::string_view text, int order);
    /// All 2^k - 2 ordered bipartitions, in increasing order of the F bitmask.
    static std::vector<FactorPartition> enumerate(int order);

    bool operator==(const FactorPartition&) const = default;

    std::string to_string() const;
};

/// A point of the product: one nonzero coordinate vector per factor.
class MultiPoint {
public:
    MultiPoint() = default;
    explicit MultiPoint(std::vector<VectorXq> factors);

    int order() const { return static_cast<int>(factors_.size()); }
    const VectorXq& factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }
    const std::vector<VectorXq>& factors() const { return factors_; }
    bool conforms(const MultiShape& shape) const;

    /// Projective equality: every factor pair is proportional.
    bool operator==(const MultiPoint& other) const;

private:
    std::vector<VectorXq> factors_;
};

/// Two nonzero vectors span the same line.
bool proportional(const VectorXq& a, const VectorXq& b);

/// A reduced finite subset of the product: distinct points of one shape.
class PointSet {
public:
    PointSet() = default;
    PointSet(MultiShape shape, std::vector<MultiPoint> points);

    const MultiShape& shape() const { return shape_; }
    Index size() const { return static_cast<Index>(points_.size()); }
    bool empty() const { return points_.empty(); }
    const MultiPoint& operator[](Index i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<MultiPoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const MultiPoint& p) const;
    /// The set with point i removed.
    PointSet without(Index i) const;

private:
    MultiShape shape_;
    std::vector<MultiPoint> points_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);

/// A tensor T as a point of P^M: M + 1 coordinates, last factor index fastest.
class AmbientTensor {
public:
    AmbientTensor(MultiShape shape, VectorXq coords);

    const MultiShape& shape() const { return shape_; }
    const VectorXq& coords() const { return coords_; }

    /// Equality as projective points.
    bool operator==(const AmbientTensor& other) const;

private:
    MultiShape shape_;
    VectorXq coords_;
};

/// Kronecker product of the factors of p listed in u, last factor fastest.
VectorXq segre_vector(const MultiPoint& p, const FactorSubset& u);

/// #S x M_u matrix whose rows are segre_vector(p, u), p in S.
MatrixXq segre_matrix(const PointSet& S, const FactorSubset& u);

/// (n_i + 1) x #S matrix whose columns are the factor-i vectors.
MatrixXq factor_matrix(const PointSet& S, int factor);

struct Cohomology {
    Index h0; ///< codimension of the span of ν(π_u(S))
    Index h1; ///< #S minus that span's affine dimension
    Index rank;
};

Cohomology cohomology(const PointSet& S, const FactorSubset& u);

/// Entry i (0-based) is the rank of the {1..i+1}-flattening of S.
std::vector<Index> segre_function(const PointSet& S);

bool has_different_coordinates(const PointSet& S);

struct Degeneracy {
    bool degenerate = false;
    std::optional<int> factor; ///< first factor whose projection fails to span
};

Degeneracy is_degenerate(const PointSet& S);

/// Σ weights_i · ν(p_i). Throws PreconditionError on length mismatch, a zero
/// weight, or a zero sum.
AmbientTensor assemble_tensor(std::span<const Rational> weights, const PointSet& S);

} // namespace tensorcert
