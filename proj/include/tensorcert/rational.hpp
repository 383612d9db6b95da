#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace tensorcert {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;
using MatrixXz = MatrixX<Integer>;

/// Exact test that every entry is zero (Eigen's isZero() is tolerance based).
template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0)
                return false;
    return true;
}

/// Reads "p" or "p/q" (optional leading sign on p, q > 0 after parsing) and
/// returns the canonical reduced value. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical decimal form: "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

} // namespace tensorcert
