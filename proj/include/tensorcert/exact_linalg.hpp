#pragma once

#include "tensorcert/errors.hpp"
#include "tensorcert/rational.hpp"

#include <optional>
#include <type_traits>

namespace tensorcert {

namespace detail {

template <typename Scalar>
inline constexpr bool is_rational_v = std::is_same_v<Scalar, Rational>;

template <typename Scalar>
inline constexpr bool is_integer_v = std::is_same_v<Scalar, Integer>;

// Rows scaled to primitive integer vectors: denominators cleared, content removed.
template <typename Derived>
MatrixXz to_primitive_rows(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    static_assert(is_rational_v<Scalar> || is_integer_v<Scalar>,
                  "exact rank needs an exact scalar");

    MatrixXz out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        if constexpr (is_rational_v<Scalar>) {
            for (Index j = 0; j < m.cols(); ++j)
                scale = boost::multiprecision::lcm(scale, denominator(m(i, j)));
        }
        Integer content = 0;
        for (Index j = 0; j < m.cols(); ++j) {
            if constexpr (is_rational_v<Scalar>)
                out(i, j) = numerator(m(i, j)) * (scale / denominator(m(i, j)));
            else
                out(i, j) = m(i, j);
            content = boost::multiprecision::gcd(content, out(i, j));
        }
        if (content > 1)
            for (Index j = 0; j < m.cols(); ++j)
                out(i, j) /= content;
    }
    return out;
}

// Fraction-free (Bareiss) forward elimination in place. Pivots are the first
// nonzero entry found scanning columns left to right, rows top to bottom.
// Returns the rank.
Index bareiss_eliminate(MatrixXz& a);

} // namespace detail

/// Exact rank over Q of a rational or integer matrix.
template <typename Derived>
Index rat_rank(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    MatrixXz work = detail::to_primitive_rows(m);
    return detail::bareiss_eliminate(work);
}

/// True iff v is a Q-linear combination of the rows of m.
template <typename DerivedV, typename DerivedM>
bool in_row_span(const Eigen::MatrixBase<DerivedV>& v, const Eigen::MatrixBase<DerivedM>& m)
{
    if (v.size() != m.cols())
        throw PreconditionError("in_row_span: vector length does not match column count");
    MatrixX<typename DerivedM::Scalar> stacked(m.rows() + 1, m.cols());
    stacked.topRows(m.rows()) = m;
    stacked.row(m.rows()) = v.transpose();
    return rat_rank(stacked) == rat_rank(m);
}

/// Projective dimension of the intersection of the two row spans (-1 when
/// they meet only in 0), by the Grassmann formula.
template <typename Derived1, typename Derived2>
Index span_intersection_dim(const Eigen::MatrixBase<Derived1>& m1,
                            const Eigen::MatrixBase<Derived2>& m2)
{
    if (m1.cols() != m2.cols())
        throw PreconditionError("span_intersection_dim: column counts differ");
    MatrixX<typename Derived1::Scalar> stacked(m1.rows() + m2.rows(), m1.cols());
    stacked.topRows(m1.rows()) = m1;
    stacked.bottomRows(m2.rows()) = m2.template cast<typename Derived1::Scalar>();
    return rat_rank(m1) + rat_rank(m2) - rat_rank(stacked) - 1;
}

/// Coefficients x with x^T m = v^T, or nullopt when v is outside the row
/// span. Free variables are set to zero, so the solution is unique when the
/// rows of m are independent.
std::optional<VectorXq> row_span_coefficients(const VectorXq& v, const MatrixXq& m);

} // namespace tensorcert
