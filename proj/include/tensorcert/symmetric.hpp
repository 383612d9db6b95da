#pragma once

#include "tensorcert/certify.hpp"

#include <span>
#include <vector>

namespace tensorcert {

/// Forms of degree `degree` in n + 1 variables.
struct SymShape {
    int n = 1;
    int degree = 1;

    SymShape(int n, int degree);
    /// D + 1 = C(degree + n, n).
    Index ambient_size() const;
    int half_degree() const { return degree / 2; }
};

/// Distinct points of P^n.
class SymPointSet {
public:
    SymPointSet() = default;
    SymPointSet(int n, std::vector<VectorXq> points);

    int n() const { return n_; }
    Index size() const { return static_cast<Index>(points_.size()); }
    const VectorXq& operator[](Index i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<VectorXq>& points() const { return points_; }
    SymPointSet without(Index i) const;

private:
    int n_ = 1;
    std::vector<VectorXq> points_;
};

/// Exponent vectors of the degree-d monomials in `vars` variables, in
/// lexicographic order starting at (d, 0, ..., 0).
std::vector<std::vector<int>> monomial_exponents(int vars, int degree);

/// All degree-d monomials evaluated at p, ordered as monomial_exponents.
VectorXq veronese_vector(const VectorXq& p, int degree);

/// #A x C(d + n, n) evaluation matrix.
MatrixXq veronese_matrix(const SymPointSet& A, int degree);

/// Σ w_i v_d(a_i) in monomial coordinates. Throws PreconditionError on a
/// zero weight, a length mismatch, or a zero sum.
VectorXq assemble_symmetric(std::span<const Rational> weights, const SymPointSet& A, int degree);

/// rank(T) = cactus rank(T) = symmetric rank(T) = #A when h1(J_A(e)) = 0 for
/// some e <= degree/2 and A is non-redundant for T in the Veronese span.
/// T is given in monomial coordinates of degree `degree`.
Certificate comon_certify(const VectorXq& T, const SymPointSet& A, int degree);

struct SymmetricBounds {
    Index r0 = 0;           ///< largest #A for which general A satisfies the e-condition
    Index rg = 0;           ///< ceil(C(n+k, k) / (n+1))
    bool exceptional = false;
    Index generic_rank = 0; ///< rg, or rg + 1 on the exceptional list
};

SymmetricBounds symmetric_bounds(int n, int degree);

/// Degree-2 forms for n >= 2 and (n, degree) in {(2,4), (3,4), (4,4), (4,3)}.
bool is_exceptional(int n, int degree);

} // namespace tensorcert
