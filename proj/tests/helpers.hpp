#pragma once

#include "oracles.hpp"
#include "tensorcert/construct.hpp"
#include "tensorcert/multiproj.hpp"

#include <initializer_list>

namespace testing_util {

using namespace tensorcert;

inline VectorXq vec(std::initializer_list<Rational> values)
{
    VectorXq v(static_cast<Index>(values.size()));
    Index i = 0;
    for (const auto& x : values)
        v(i++) = x;
    return v;
}

inline MultiPoint pt(std::initializer_list<std::initializer_list<Rational>> factors)
{
    std::vector<VectorXq> out;
    for (const auto& f : factors)
        out.push_back(vec(f));
    return MultiPoint(std::move(out));
}

inline std::vector<Rational> ones(Index n) { return std::vector<Rational>(static_cast<std::size_t>(n), 1); }

inline std::vector<std::vector<Rational>> factor_lists(const MultiPoint& p)
{
    std::vector<std::vector<Rational>> out;
    for (const auto& f : p.factors())
        out.emplace_back(f.data(), f.data() + f.size());
    return out;
}

// Matrix of a k = 2 tensor, rows indexed by the first factor.
inline MatrixXq as_matrix(const AmbientTensor& T)
{
    const int rows = T.shape().size(0), cols = T.shape().size(1);
    MatrixXq m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = T.coords()(i * cols + j);
    return m;
}

} // namespace testing_util
