#pragma once

#include "tensorcert/certify.hpp"

#include <string>
#include <vector>

namespace tensorcert {

/// Largest κ such that every κ columns of m are linearly independent.
/// Throws PreconditionError on a zero column or more than 20 columns.
Index kruskal_rank(const MatrixXq& m);

struct KruskalReport {
    std::vector<Index> per_factor_kruskal_rank;
    Index condition_lhs = 0; ///< Σ k_i
    Index condition_rhs = 0; ///< 2r + k - 1
    bool applies = false;
};

/// Kruskal ranks of the factor matrices of S and the k-way condition
/// Σ k_i >= 2r + k - 1.
KruskalReport kruskal_certificate(const PointSet& S);

inline constexpr const char* kKruskalBaseline = "k-way Kruskal: sum of Kruskal ranks >= 2r + k - 1";

/// Side-by-side run of the flattening criteria and the Kruskal baseline.
struct Comparison {
    Certificate non_redundant;
    BoundReport bound;
    Certificate exact_rank;
    Certificate ee4;
    KruskalReport kruskal;
    bool flattening_applies = false; ///< exact rank or ee4 certified
    bool kruskal_applies = false;    ///< Kruskal condition holds and S is non-redundant
    bool flattening_only = false;
    std::string baseline = kKruskalBaseline;
};

Comparison compare_criteria(const AmbientTensor& T, const PointSet& S);

} // namespace tensorcert
