#pragma once

#include "tensorcert/multiproj.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tensorcert {

enum class Claim {
    NonRedundant,
    CactusRankLowerBound,
    ExactRank,
    MinimalRank,
    Identifiable,
    DifferentCoordinatesObstruction,
    ProjectionPinning,
    PropBBVerified,
};

/// Asserted hypotheses come from the caller and are not checked.
enum class Status { Pass, Fail, Asserted };

std::string to_string(Claim claim);
std::string to_string(Status status);
Claim parse_claim(std::string_view text);
Status parse_status(std::string_view text);

struct Hypothesis {
    std::string name;
    Status status = Status::Fail;
    std::string witness;

    bool holds() const { return status != Status::Fail; }
    bool operator==(const Hypothesis&) const = default;
};

struct Conclusion {
    std::string statement;
    std::vector<std::pair<std::string, std::int64_t>> values;

    bool operator==(const Conclusion&) const = default;
};

/// A verdict together with everything it rests on. `conclusion` is set only
/// when every hypothesis holds; `parts` carries sub-certificates whose own
/// conclusions feed the parent (e.g. one per factor family).
struct Certificate {
    Claim claim = Claim::NonRedundant;
    std::vector<Hypothesis> hypotheses;
    std::optional<Conclusion> conclusion;
    std::string theorem_ref;
    std::vector<std::string> notes;
    std::vector<Certificate> parts;

    bool certified() const { return conclusion.has_value(); }
    bool all_hold() const;
    /// Sets the conclusion iff all hypotheses hold.
    void conclude(Conclusion c);

    bool operator==(const Certificate& other) const;
};

struct PartitionBound {
    FactorPartition partition;
    bool applicable = false;
    Index bound = 1;        ///< M_F - h0(S, F); meaningful when applicable
    Index h1_E = 0;
    Index h0_F = 0;
    std::string reason;     ///< why not applicable

    bool operator==(const PartitionBound&) const = default;
};

struct BoundReport {
    Index best_bound = 1;
    std::optional<FactorPartition> best_partition;
    std::vector<PartitionBound> per_partition;
};

/// ν(S) independent, T in its span, and T outside the span of every S \ {p}.
Certificate check_non_redundant(const AmbientTensor& T, const PointSet& S);

/// Flattening lower bound on the cactus rank (hence the rank) of any T
/// non-redundantly spanned by S. Without a partition, all 2^k - 2 ordered
/// bipartitions are tried and the largest bound wins (first one on ties).
BoundReport bound_cactus_rank(const PointSet& S,
                              const std::optional<FactorPartition>& partition = std::nullopt);

/// Certificate view of a bound report; the non-redundancy of T over S is
/// recorded as an assumed hypothesis.
Certificate bound_certificate(const PointSet& S, const BoundReport& report);

/// rank(T) = cactus rank(T) = #S when S is non-redundant for T and some
/// bipartition has both flattenings of S independent.
Certificate certify_exact_rank(const AmbientTensor& T, const PointSet& S,
                               const std::optional<FactorPartition>& partition = std::nullopt);

/// Minimality (2r <= k + m) and identifiability (2r < k + m), with k and m
/// read off the smallest multiprojective space containing S.
Certificate certify_ee4(const AmbientTensor& T, const PointSet& S);

/// dim(<ν(A)> ∩ <ν(B)>) = dim <ν(A ∩ B)> + h1(I_{A ∪ B}(1)).
Certificate verify_prop_bb(const PointSet& A, const PointSet& B);

/// Any other non-redundant decomposition with at most x points of a tensor
/// non-redundantly spanned by S fails to have different coordinates.
/// Throws PreconditionError unless 0 < x < k.
Certificate obstruct_alt_decompositions(const PointSet& S, int x);

/// families[i] must contain factor i and leave a nonempty complement.
/// Throws PreconditionError otherwise.
Certificate pin_projections(const AmbientTensor& T, const PointSet& S,
                            const std::vector<FactorSubset>& families,
                            const std::vector<bool>& quasi_general_asserted);

} // namespace tensorcert
