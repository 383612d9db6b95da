#include "tensorcert/kruskal.hpp"

#include "tensorcert/errors.hpp"

#include <numeric>

namespace tensorcert {

namespace {

constexpr Index kMaxColumns = 20;

MatrixXq columns(const MatrixXq& m, const std::vector<Index>& pick)
{
    MatrixXq out(m.rows(), static_cast<Index>(pick.size()));
    for (std::size_t j = 0; j < pick.size(); ++j)
        out.col(static_cast<Index>(j)) = m.col(pick[j]);
    return out;
}

// Next size-κ combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<Index>& pick, Index n)
{
    const auto size = static_cast<Index>(pick.size());
    for (Index i = size - 1; i >= 0; --i) {
        if (pick[static_cast<std::size_t>(i)] < n - size + i) {
            ++pick[static_cast<std::size_t>(i)];
            for (Index j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// Every κ-subset of columns independent.
bool all_subsets_independent(const MatrixXq& m, Index kappa)
{
    std::vector<Index> pick(static_cast<std::size_t>(kappa));
    std::iota(pick.begin(), pick.end(), 0);
    do {
        if (rat_rank(columns(m, pick)) < kappa)
            return false;
    } while (next_combination(pick, m.cols()));
    return true;
}

} // namespace

Index kruskal_rank(const MatrixXq& m)
{
    if (m.cols() > kMaxColumns)
        throw PreconditionError("kruskal_rank: more than 20 columns");
    for (Index j = 0; j < m.cols(); ++j)
        if (all_zero(m.col(j)))
            throw PreconditionError("kruskal_rank: zero column " + std::to_string(j + 1));
    if (m.cols() == 0)
        return 0;

    // κ <= rank; a dependent pair already pins κ = 1.
    const Index rank = rat_rank(m);
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < j; ++i)
            if (proportional(m.col(i), m.col(j)))
                return 1;

    // Independence of every κ-subset implies it for every smaller size, so
    // the first κ that holds scanning down from the rank is the answer.
    for (Index kappa = rank; kappa > 2; --kappa)
        if (all_subsets_independent(m, kappa))
            return kappa;
    return std::min<Index>(2, m.cols());
}

KruskalReport kruskal_certificate(const PointSet& S)
{
    KruskalReport report;
    const int k = S.shape().order();
    for (int i = 0; i < k; ++i) {
        report.per_factor_kruskal_rank.push_back(kruskal_rank(factor_matrix(S, i)));
        report.condition_lhs += report.per_factor_kruskal_rank.back();
    }
    report.condition_rhs = 2 * S.size() + k - 1;
    report.applies = report.condition_lhs >= report.condition_rhs;
    return report;
}

Comparison compare_criteria(const AmbientTensor& T, const PointSet& S)
{
    Comparison out;
    out.non_redundant = check_non_redundant(T, S);
    out.bound = bound_cactus_rank(S);
    out.exact_rank = certify_exact_rank(T, S);
    out.ee4 = certify_ee4(T, S);
    out.kruskal = kruskal_certificate(S);
    out.flattening_applies = out.exact_rank.certified() || out.ee4.certified();
    out.kruskal_applies = out.kruskal.applies && out.non_redundant.certified();
    out.flattening_only = out.flattening_applies && !out.kruskal_applies;
    return out;
}

} // namespace tensorcert
