#include "tensorcert/symmetric.hpp"

#include "tensorcert/errors.hpp"

namespace tensorcert {

namespace {

Index binomial(int n, int k)
{
    Index out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

void fill_exponents(int vars, int remaining, std::vector<int>& current,
                    std::vector<std::vector<int>>& out)
{
    const auto position = static_cast<int>(current.size());
    if (position == vars - 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current.push_back(e);
        fill_exponents(vars, remaining - e, current, out);
        current.pop_back();
    }
}

} // namespace

SymShape::SymShape(int n_, int degree_) : n(n_), degree(degree_)
{
    if (n < 1 || degree < 1)
        throw PreconditionError("symmetric shape needs n >= 1 and degree >= 1");
}

Index SymShape::ambient_size() const { return binomial(degree + n, n); }

SymPointSet::SymPointSet(int n, std::vector<VectorXq> points) : n_(n), points_(std::move(points))
{
    if (n_ < 1)
        throw PreconditionError("symmetric points need n >= 1");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != n_ + 1)
            throw PreconditionError("point " + std::to_string(i + 1) + " needs " +
                                    std::to_string(n_ + 1) + " coordinates");
        if (all_zero(points_[i]))
            throw PreconditionError("point " + std::to_string(i + 1) + " is zero");
        for (std::size_t j = 0; j < i; ++j)
            if (proportional(points_[i], points_[j]))
                throw PreconditionError("points " + std::to_string(j + 1) + " and " +
                                        std::to_string(i + 1) + " coincide");
    }
}

SymPointSet SymPointSet::without(Index i) const
{
    std::vector<VectorXq> rest = points_;
    rest.erase(rest.begin() + i);
    return SymPointSet(n_, std::move(rest));
}

std::vector<std::vector<int>> monomial_exponents(int vars, int degree)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    fill_exponents(vars, degree, current, out);
    return out;
}

VectorXq veronese_vector(const VectorXq& p, int degree)
{
    const auto exps = monomial_exponents(static_cast<int>(p.size()), degree);
    VectorXq out(static_cast<Index>(exps.size()));
    for (std::size_t m = 0; m < exps.size(); ++m) {
        Rational value = 1;
        for (std::size_t v = 0; v < exps[m].size(); ++v)
            for (int e = 0; e < exps[m][v]; ++e)
                value *= p(static_cast<Index>(v));
        out(static_cast<Index>(m)) = value;
    }
    return out;
}

MatrixXq veronese_matrix(const SymPointSet& A, int degree)
{
    MatrixXq m(A.size(), binomial(degree + A.n(), A.n()));
    for (Index i = 0; i < A.size(); ++i)
        m.row(i) = veronese_vector(A[i], degree).transpose();
    return m;
}

VectorXq assemble_symmetric(std::span<const Rational> weights, const SymPointSet& A, int degree)
{
    if (static_cast<Index>(weights.size()) != A.size())
        throw PreconditionError("need one weight per point");
    VectorXq sum = VectorXq::Zero(binomial(degree + A.n(), A.n()));
    for (Index i = 0; i < A.size(); ++i) {
        if (weights[static_cast<std::size_t>(i)] == 0)
            throw PreconditionError("weights must be nonzero");
        sum += weights[static_cast<std::size_t>(i)] * veronese_vector(A[i], degree);
    }
    if (all_zero(sum))
        throw PreconditionError("weights annihilate the decomposition");
    return sum;
}

Certificate comon_certify(const VectorXq& T, const SymPointSet& A, int degree)
{
    const SymShape shape(A.n(), degree);
    if (A.size() == 0)
        throw PreconditionError("decomposition is empty");
    if (T.size() != shape.ambient_size())
        throw PreconditionError("symmetric tensor needs " + std::to_string(shape.ambient_size()) +
                                " monomial coordinates");

    Certificate cert;
    cert.claim = Claim::ExactRank;
    cert.theorem_ref = "Cor. comon";
    const Index r = A.size();

    // h1(J_A(e)) is nonincreasing in e, so searching down from degree/2 stops
    // at the first attempt unless every e fails.
    bool found = false;
    std::string attempts;
    for (int e = shape.half_degree(); e >= 0 && !found; --e) {
        const Index rank = rat_rank(veronese_matrix(A, e));
        attempts += (attempts.empty() ? "" : "; ") + ("e=" + std::to_string(e) + ": rank " +
                                                       std::to_string(rank) + " of " +
                                                       std::to_string(r));
        found = rank == r;
    }
    cert.hypotheses.push_back({"h1(J_A(e)) = 0 for some e <= k/2",
                               found ? Status::Pass : Status::Fail, attempts});

    const MatrixXq top = veronese_matrix(A, degree);
    const bool spanned = in_row_span(T, top);
    cert.hypotheses.push_back({"T in <v_k(A)>", spanned ? Status::Pass : Status::Fail,
                               spanned ? "rank unchanged when T is appended"
                                       : "rank grows when T is appended"});
    for (Index i = 0; i < r; ++i) {
        const std::string name = "T outside <v_k(A \\ {a" + std::to_string(i + 1) + "})>";
        const bool inside = r > 1 && in_row_span(T, veronese_matrix(A.without(i), degree));
        cert.hypotheses.push_back({name, inside ? Status::Fail : Status::Pass,
                                   inside ? "T lies in the span of the other points"
                                          : "rank grows when T is appended"});
    }

    cert.conclude({"rank = cactus rank = symmetric rank = " + std::to_string(r),
                   {{"rank", r}}});
    return cert;
}

bool is_exceptional(int n, int degree)
{
    if (degree == 2)
        return n >= 2;
    if (degree == 4)
        return n >= 2 && n <= 4;
    return degree == 3 && n == 4;
}

SymmetricBounds symmetric_bounds(int n, int degree)
{
    const SymShape shape(n, degree);
    const int e = shape.half_degree();
    SymmetricBounds out;
    out.r0 = binomial(n + e, e) + (degree % 2 == 1 ? 1 : 0);
    const Index forms = shape.ambient_size();
    out.rg = (forms + n) / (n + 1);
    out.exceptional = is_exceptional(n, degree);
    // Quadrics have generic rank n + 1; the other exceptional cases exceed
    // the expected value by one.
    if (degree == 2)
        out.generic_rank = n + 1;
    else
        out.generic_rank = out.rg + (out.exceptional ? 1 : 0);
    return out;
}

} // namespace tensorcert
