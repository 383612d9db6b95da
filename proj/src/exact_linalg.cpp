#include "tensorcert/exact_linalg.hpp"

#include <utility>

namespace tensorcert {

namespace detail {

Index bareiss_eliminate(MatrixXz& a)
{
    const Index rows = a.rows();
    const Index cols = a.cols();
    Index rank = 0;
    Integer previous = 1;

    for (Index c = 0; c < cols && rank < rows; ++c) {
        Index pivot = rank;
        while (pivot < rows && a(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            a.row(pivot).swap(a.row(rank));

        const Integer& p = a(rank, c);
        for (Index i = rank + 1; i < rows; ++i) {
            const Integer lead = a(i, c);
            for (Index j = c + 1; j < cols; ++j)
                a(i, j) = (p * a(i, j) - lead * a(rank, j)) / previous;
            a(i, c) = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

} // namespace detail

std::optional<VectorXq> row_span_coefficients(const VectorXq& v, const MatrixXq& m)
{
    if (v.size() != m.cols())
        throw PreconditionError("row_span_coefficients: vector length does not match column count");

    // Gauss-Jordan on [m^T | v]; unknowns are the row coefficients.
    const Index unknowns = m.rows();
    const Index equations = m.cols();
    MatrixXq aug(equations, unknowns + 1);
    aug.leftCols(unknowns) = m.transpose();
    aug.col(unknowns) = v;

    std::vector<Index> pivot_cols;
    Index row = 0;
    for (Index c = 0; c < unknowns && row < equations; ++c) {
        Index p = row;
        while (p < equations && aug(p, c) == 0)
            ++p;
        if (p == equations)
            continue;
        if (p != row)
            aug.row(p).swap(aug.row(row));
        const Rational inv = 1 / aug(row, c);
        aug.row(row) *= inv;
        for (Index i = 0; i < equations; ++i) {
            if (i == row || aug(i, c) == 0)
                continue;
            const Rational f = aug(i, c);
            aug.row(i) -= f * aug.row(row);
        }
        pivot_cols.push_back(c);
        ++row;
    }
    for (Index i = row; i < equations; ++i)
        if (aug(i, unknowns) != 0)
            return std::nullopt;

    VectorXq x = VectorXq::Zero(unknowns);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        x(pivot_cols[i]) = aug(static_cast<Index>(i), unknowns);
    return x;
}

} // namespace tensorcert
