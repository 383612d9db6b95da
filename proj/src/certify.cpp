#include "tensorcert/certify.hpp"

#include "tensorcert/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace tensorcert {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 8> kClaimNames{{
    {Claim::NonRedundant, "NonRedundant"},
    {Claim::CactusRankLowerBound, "CactusRankLowerBound"},
    {Claim::ExactRank, "ExactRank"},
    {Claim::MinimalRank, "MinimalRank"},
    {Claim::Identifiable, "Identifiable"},
    {Claim::DifferentCoordinatesObstruction, "DifferentCoordinatesObstruction"},
    {Claim::ProjectionPinning, "ProjectionPinning"},
    {Claim::PropBBVerified, "PropBBVerified"},
}};

std::string dims_text(Index rows, Index cols)
{
    return std::to_string(rows) + "x" + std::to_string(cols);
}

Hypothesis check(std::string name, bool ok, std::string witness)
{
    return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness)};
}

std::string point_label(Index i) { return "p" + std::to_string(i + 1); }

void require_same_shape(const AmbientTensor& T, const PointSet& S)
{
    if (!(T.shape() == S.shape()))
        throw PreconditionError("tensor shape " + T.shape().to_string() +
                                " differs from decomposition shape " + S.shape().to_string());
    if (S.empty())
        throw PreconditionError("decomposition is empty");
}

// Hypothesis summarizing a NonRedundant certificate, for stapling into others.
Hypothesis non_redundancy_hypothesis(const Certificate& nr)
{
    std::string witness = "all checks pass";
    for (const auto& h : nr.hypotheses)
        if (!h.holds()) {
            witness = "fails: " + h.name;
            break;
        }
    return {"T non-redundant over S", nr.certified() ? Status::Pass : Status::Fail, witness};
}

} // namespace

std::string to_string(Claim claim)
{
    for (const auto& [c, name] : kClaimNames)
        if (c == claim)
            return std::string(name);
    return "?";
}

std::string to_string(Status status)
{
    switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Asserted: return "ASSERTED";
    }
    return "?";
}

Claim parse_claim(std::string_view text)
{
    for (const auto& [c, name] : kClaimNames)
        if (name == text)
            return c;
    throw ParseError("unknown claim \"" + std::string(text) + "\"");
}

Status parse_status(std::string_view text)
{
    if (text == "PASS")
        return Status::Pass;
    if (text == "FAIL")
        return Status::Fail;
    if (text == "ASSERTED")
        return Status::Asserted;
    throw ParseError("unknown hypothesis status \"" + std::string(text) + "\"");
}

bool Certificate::all_hold() const
{
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Hypothesis& h) { return h.holds(); });
}

void Certificate::conclude(Conclusion c)
{
    if (all_hold())
        conclusion = std::move(c);
    else
        conclusion.reset();
}

bool Certificate::operator==(const Certificate& other) const
{
    return claim == other.claim && hypotheses == other.hypotheses &&
           conclusion == other.conclusion && theorem_ref == other.theorem_ref &&
           notes == other.notes && parts == other.parts;
}

// Non-redundancy --------------------------------------------------------------

Certificate check_non_redundant(const AmbientTensor& T, const PointSet& S)
{
    require_same_shape(T, S);
    Certificate cert;
    cert.claim = Claim::NonRedundant;
    cert.theorem_ref = "Def. NonRedundant";

    const FactorSubset all = FactorSubset::full(S.shape().order());
    const MatrixXq segre = segre_matrix(S, all);
    const Index rank = rat_rank(segre);
    cert.hypotheses.push_back(check("ν(S) linearly independent", rank == S.size(),
                                    "rank " + std::to_string(rank) + " of " +
                                        dims_text(segre.rows(), segre.cols()) +
                                        " Segre matrix, h1 = " +
                                        std::to_string(S.size() - rank)));

    const bool spanned = in_row_span(T.coords(), segre);
    cert.hypotheses.push_back(check("T in <ν(S)>", spanned,
                                    spanned ? "rank unchanged when T is appended"
                                            : "rank grows when T is appended"));

    for (Index i = 0; i < S.size(); ++i) {
        const std::string name = "T outside <ν(S \\ {" + point_label(i) + "})>";
        if (S.size() == 1) {
            cert.hypotheses.push_back(check(name, true, "span of the empty set is 0"));
            continue;
        }
        const MatrixXq rest = segre_matrix(S.without(i), all);
        const bool inside = in_row_span(T.coords(), rest);
        cert.hypotheses.push_back(check(name, !inside,
                                        inside ? "T lies in the span of the other points"
                                               : "rank grows when T is appended"));
    }

    cert.conclude({"S is a non-redundant decomposition of T with " + std::to_string(S.size()) +
                       " points",
                   {{"r", S.size()}}});
    return cert;
}

// Flattening bounds -----------------------------------------------------------

BoundReport bound_cactus_rank(const PointSet& S, const std::optional<FactorPartition>& partition)
{
    if (S.empty())
        throw PreconditionError("decomposition is empty");
    const int k = S.shape().order();
    const std::vector<FactorPartition> candidates =
        partition ? std::vector<FactorPartition>{*partition} : FactorPartition::enumerate(k);

    BoundReport report;
    for (const auto& p : candidates) {
        PartitionBound entry;
        entry.partition = p;
        const Cohomology e = cohomology(S, p.E);
        const Cohomology f = cohomology(S, p.F);
        entry.h1_E = e.h1;
        entry.h0_F = f.h0;
        entry.bound = f.rank;
        if (e.h1 != 0)
            entry.reason = "h1(I_S(E)) = " + std::to_string(e.h1) + " != 0";
        else if (entry.bound <= 1)
            entry.reason = "bound <= 1 (no admissible c > 0)";
        else
            entry.applicable = true;

        if (entry.applicable && entry.bound > report.best_bound) {
            report.best_bound = entry.bound;
            report.best_partition = p;
        }
        report.per_partition.push_back(std::move(entry));
    }
    return report;
}

Certificate bound_certificate(const PointSet& S, const BoundReport& report)
{
    Certificate cert;
    cert.claim = Claim::CactusRankLowerBound;
    cert.theorem_ref = "Thm. add7, Cor. add7cor";
    cert.hypotheses.push_back({"T non-redundant over S", Status::Asserted,
                               "established separately by the NonRedundant certificate"});

    if (!report.best_partition) {
        cert.hypotheses.push_back(check("bipartition with h1(I_S(E)) = 0 and bound >= 2", false,
                                        "none of " + std::to_string(report.per_partition.size()) +
                                            " tried"));
        cert.conclude({});
        return cert;
    }

    const FactorPartition& p = *report.best_partition;
    const auto entry = std::find_if(report.per_partition.begin(), report.per_partition.end(),
                                    [&](const PartitionBound& b) { return b.partition == p; });
    const Index m_F = S.shape().ambient_size(p.F);
    const Index c = entry->bound - 1;
    cert.hypotheses.push_back(check("h1(I_S(E)) = 0, E = {" + p.E.to_string() + "}", true,
                                    "rank " + std::to_string(S.size()) + " of the E-flattening"));
    cert.hypotheses.push_back(check("h0(I_S(F)) < M_F - c, F = {" + p.F.to_string() + "}", true,
                                    "h0 = " + std::to_string(entry->h0_F) + ", M_F = " +
                                        std::to_string(m_F) + ", c = " + std::to_string(c)));
    cert.conclude({"cactus rank(T) >= " + std::to_string(entry->bound) + ", hence rank(T) >= " +
                       std::to_string(entry->bound),
                   {{"bound", entry->bound}, {"c", c}}});
    return cert;
}

Certificate certify_exact_rank(const AmbientTensor& T, const PointSet& S,
                               const std::optional<FactorPartition>& partition)
{
    Certificate cert;
    cert.claim = Claim::ExactRank;
    cert.theorem_ref = "Cor. alessandra";
    Certificate nr = check_non_redundant(T, S);
    cert.hypotheses.push_back(non_redundancy_hypothesis(nr));
    cert.parts.push_back(std::move(nr));

    const int k = S.shape().order();
    const std::vector<FactorPartition> candidates =
        partition ? std::vector<FactorPartition>{*partition} : FactorPartition::enumerate(k);

    if (candidates.empty()) {
        cert.hypotheses.push_back(check("single summand (one-factor product)", S.size() == 1,
                                        "#S = " + std::to_string(S.size())));
    } else {
        bool found = false;
        for (const auto& p : candidates) {
            const Cohomology e = cohomology(S, p.E);
            const Cohomology f = cohomology(S, p.F);
            const bool last = &p == &candidates.back();
            if ((e.h1 == 0 && f.h1 == 0) || (last && candidates.size() == 1)) {
                cert.hypotheses.push_back(check("h1(I_S(E)) = 0, E = {" + p.E.to_string() + "}",
                                                e.h1 == 0, "h1 = " + std::to_string(e.h1)));
                cert.hypotheses.push_back(check("h1(I_S(F)) = 0, F = {" + p.F.to_string() + "}",
                                                f.h1 == 0, "h1 = " + std::to_string(f.h1)));
                found = true;
                break;
            }
        }
        if (!found)
            cert.hypotheses.push_back(check("bipartition with h1(I_S(E)) = h1(I_S(F)) = 0", false,
                                            "none of " + std::to_string(candidates.size()) +
                                                " tried"));
    }

    cert.conclude({"rank = cactus rank = " + std::to_string(S.size()), {{"rank", S.size()}}});
    return cert;
}

Certificate certify_ee4(const AmbientTensor& T, const PointSet& S)
{
    Certificate cert;
    cert.theorem_ref = "Thm. ee4";
    Certificate nr = check_non_redundant(T, S);
    cert.hypotheses.push_back(non_redundancy_hypothesis(nr));
    cert.parts.push_back(std::move(nr));

    const Index r = S.size();
    if (r == 1) {
        cert.claim = Claim::Identifiable;
        cert.hypotheses.push_back(check("single summand", true, "r = 1"));
        cert.conclude({"rank(T) = 1 and S is the unique minimal decomposition",
                       {{"rank", 1}, {"k", 0}, {"m", 0}}});
        return cert;
    }

    // Smallest product containing S: factor i becomes the span of π_i(S).
    std::string spans;
    int k = 0;
    int m = 0;
    for (int i = 0; i < S.shape().order(); ++i) {
        const int n = static_cast<int>(rat_rank(factor_matrix(S, i))) - 1;
        spans += (i > 0 ? "," : "") + std::to_string(n);
        if (n >= 1) {
            ++k;
            m = std::max(m, n);
        }
    }
    if (const Degeneracy d = is_degenerate(S); d.degenerate)
        cert.notes.push_back("S is degenerate in factor " + std::to_string(*d.factor + 1) +
                             "; k and m are taken from the product of the spans of its "
                             "projections");

    const bool unique = 2 * r < k + m;
    cert.claim = unique ? Claim::Identifiable : Claim::MinimalRank;
    cert.hypotheses.push_back(check("2r <= k + m", 2 * r <= k + m,
                                    "2*" + std::to_string(r) + " = " + std::to_string(2 * r) +
                                        ", k + m = " + std::to_string(k) + " + " +
                                        std::to_string(m) + " (spanned dims " + spans + ")"));
    if (unique)
        cert.conclude({"rank(T) = " + std::to_string(r) +
                           " and S is the unique minimal decomposition",
                       {{"rank", r}, {"k", k}, {"m", m}}});
    else
        cert.conclude({"rank(T) = " + std::to_string(r), {{"rank", r}, {"k", k}, {"m", m}}});
    return cert;
}

Certificate verify_prop_bb(const PointSet& A, const PointSet& B)
{
    if (!(A.shape() == B.shape()))
        throw PreconditionError("A and B live in different products");
    Certificate cert;
    cert.claim = Claim::PropBBVerified;
    cert.theorem_ref = "Prop. bb";

    const FactorSubset all = FactorSubset::full(A.shape().order());
    const MatrixXq ma = segre_matrix(A, all);
    const MatrixXq mb = segre_matrix(B, all);
    const Index rank_a = rat_rank(ma);
    const Index rank_b = rat_rank(mb);
    cert.hypotheses.push_back(check("ν(A) linearly independent", rank_a == A.size(),
                                    "rank " + std::to_string(rank_a) + " of " +
                                        std::to_string(A.size())));
    cert.hypotheses.push_back(check("ν(B) linearly independent", rank_b == B.size(),
                                    "rank " + std::to_string(rank_b) + " of " +
                                        std::to_string(B.size())));

    const Index lhs = span_intersection_dim(ma, mb);
    const PointSet common = set_intersection(A, B);
    const Index dim_common = rat_rank(segre_matrix(common, all)) - 1;
    const PointSet joined = set_union(A, B);
    const Index h1_union = joined.size() - rat_rank(segre_matrix(joined, all));
    const Index rhs = dim_common + h1_union;
    cert.hypotheses.push_back(check("dim(<ν(A)> ∩ <ν(B)>) = dim <ν(A ∩ B)> + h1(I_{A ∪ B}(1))",
                                    lhs == rhs,
                                    "lhs = " + std::to_string(lhs) + ", rhs = " +
                                        std::to_string(dim_common) + " + " +
                                        std::to_string(h1_union)));
    cert.conclude({"dim(<ν(A)> ∩ <ν(B)>) = " + std::to_string(lhs),
                   {{"lhs", lhs}, {"dim_intersection", dim_common}, {"h1_union", h1_union}}});
    return cert;
}

Certificate obstruct_alt_decompositions(const PointSet& S, int x)
{
    const int k = S.shape().order();
    if (x <= 0 || x >= k)
        throw PreconditionError("x must satisfy 0 < x < k = " + std::to_string(k));
    if (S.empty())
        throw PreconditionError("decomposition is empty");

    Certificate cert;
    cert.claim = Claim::DifferentCoordinatesObstruction;
    cert.theorem_ref = "Thm. add6";
    const Index r = S.size();

    std::string clash = "every factor projection is injective";
    bool distinct = true;
    for (int f = 0; f < k && distinct; ++f)
        for (Index i = 0; i < r && distinct; ++i)
            for (Index j = 0; j < i && distinct; ++j)
                if (proportional(S[i].factor(f), S[j].factor(f))) {
                    distinct = false;
                    clash = point_label(j) + " and " + point_label(i) + " agree in factor " +
                            std::to_string(f + 1);
                }
    cert.hypotheses.push_back(check("S has different coordinates", distinct, clash));

    // (m'+1)^(k-x) >= r, saturating once the power passes r.
    const Index base = S.shape().min_dim() + 1;
    Index power = 1;
    for (int i = 0; i < k - x && power < r; ++i)
        power *= base;
    cert.hypotheses.push_back(check("(m'+1)^(k-x) >= r", power >= r,
                                    std::to_string(base) + "^" + std::to_string(k - x) +
                                        (power >= r ? " >= " : " < ") + std::to_string(r)));

    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        if (std::popcount(mask) != k - x)
            continue;
        const FactorSubset u = FactorSubset::from_mask(mask, k);
        const Cohomology c = cohomology(S, u);
        cert.hypotheses.push_back(check("h1(I_S(u)) = 0, u = {" + u.to_string() + "}", c.h1 == 0,
                                        "rank " + std::to_string(c.rank) + " of " +
                                            std::to_string(r)));
    }

    cert.conclude({"no other non-redundant decomposition with at most " + std::to_string(x) +
                       " points of a tensor non-redundantly spanned by S has different "
                       "coordinates",
                   {{"x", x}, {"r", r}}});
    return cert;
}

Certificate pin_projections(const AmbientTensor& T, const PointSet& S,
                            const std::vector<FactorSubset>& families,
                            const std::vector<bool>& quasi_general_asserted)
{
    const int k = S.shape().order();
    if (static_cast<int>(families.size()) != k)
        throw PreconditionError("need one factor family per factor");
    if (quasi_general_asserted.size() != families.size())
        throw PreconditionError("need one quasi-generality flag per family");
    for (int i = 0; i < k; ++i) {
        if (!families[i].contains(i))
            throw PreconditionError("family " + std::to_string(i + 1) + " must contain factor " +
                                    std::to_string(i + 1));
        if (!families[i].complement(k))
            throw PreconditionError("family " + std::to_string(i + 1) +
                                    " leaves no complementary factors");
    }

    Certificate cert;
    cert.claim = Claim::ProjectionPinning;
    const Certificate nr = check_non_redundant(T, S);
    const Hypothesis nr_hyp = non_redundancy_hypothesis(nr);
    cert.hypotheses.push_back(nr_hyp);

    const Index r = S.size();
    unsigned pinned = 0;
    std::vector<int> holding;
    for (int i = 0; i < k; ++i) {
        const FactorSubset& F = families[i];
        const FactorSubset E = *F.complement(k);
        const Index m_F = S.shape().ambient_size(F);
        const Index m_E = S.shape().ambient_size(E);
        const Cohomology cf = cohomology(S, F);
        const Cohomology ce = cohomology(S, E);

        Certificate part;
        part.claim = Claim::ProjectionPinning;
        part.theorem_ref = "Prop. add14";
        part.hypotheses.push_back(nr_hyp);
        part.hypotheses.push_back(check("r < M_F, F = {" + F.to_string() + "}", r < m_F,
                                        std::to_string(r) + (r < m_F ? " < " : " >= ") +
                                            std::to_string(m_F)));
        part.hypotheses.push_back(check("r <= M_E, E = {" + E.to_string() + "}", r <= m_E,
                                        std::to_string(r) + (r <= m_E ? " <= " : " > ") +
                                            std::to_string(m_E)));
        part.hypotheses.push_back(check("h0(I_S(F)) = M_F - r", cf.h0 == m_F - r,
                                        "h0 = " + std::to_string(cf.h0)));
        part.hypotheses.push_back(check("h0(I_S(E)) = M_E - r", ce.h0 == m_E - r,
                                        "h0 = " + std::to_string(ce.h0)));
        const std::string qg_witness = "π_{" + F.to_string() + "}(S)";
        part.hypotheses.push_back(
            {"quasi-general", quasi_general_asserted[i] ? Status::Asserted : Status::Fail,
             quasi_general_asserted[i] ? qg_witness + ", caller assertion"
                                       : qg_witness + ", not asserted and not verifiable here"});
        part.conclude({"any decomposition S' != S of T with #S' <= r has #S' = r and π_{" +
                           F.to_string() + "}(S') = π_{" + F.to_string() + "}(S)",
                       {{"r", r}, {"family", i + 1}}});
        if (part.certified()) {
            pinned |= F.mask();
            holding.push_back(i + 1);
        }
        cert.parts.push_back(std::move(part));
    }

    std::string held = holding.empty() ? "none" : "";
    for (std::size_t j = 0; j < holding.size(); ++j)
        held += (j > 0 ? "," : "") + std::to_string(holding[j]);
    cert.hypotheses.push_back(check("some family satisfies all hypotheses", !holding.empty(),
                                    "families holding: " + held));

    const bool all_families = static_cast<int>(holding.size()) == k;
    cert.theorem_ref = all_families ? "Cor. add14cor" : "Prop. add14";
    std::string factors;
    for (int i = 0; i < k; ++i)
        if (pinned & (1u << i))
            factors += (factors.empty() ? "" : ",") + std::to_string(i + 1);
    cert.conclude({all_families
                       ? "any decomposition S' != S of T with #S' <= r is a finite set with "
                         "#S' = r and π_i(S') = π_i(S) for all i"
                       : "any decomposition S' != S of T with #S' <= r has #S' = r and "
                         "π_i(S') = π_i(S) for i in {" + factors + "}",
                   {{"r", r}, {"pinned_mask", static_cast<std::int64_t>(pinned)}}});
    cert.notes.push_back("S' = S is not implied: points of S' may rearrange the coordinates of "
                         "points of S across factors");
    return cert;
}

} // namespace tensorcert
