#include "tensorcert/multiproj.hpp"

#include "tensorcert/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace tensorcert {

// MultiShape ------------------------------------------------------------------

MultiShape::MultiShape(std::vector<int> dims) : dims_(std::move(dims))
{
    if (dims_.empty())
        throw PreconditionError("a shape needs at least one factor");
    if (std::any_of(dims_.begin(), dims_.end(), [](int n) { return n < 0; }))
        throw PreconditionError("factor dimensions must be >= 0");
}

MultiShape MultiShape::from_sizes(std::span<const int> sizes)
{
    std::vector<int> dims;
    dims.reserve(sizes.size());
    for (int d : sizes) {
        if (d < 1)
            throw PreconditionError("factor sizes must be >= 1");
        dims.push_back(d - 1);
    }
    return MultiShape(std::move(dims));
}

std::vector<int> MultiShape::sizes() const
{
    std::vector<int> out;
    out.reserve(dims_.size());
    for (int n : dims_)
        out.push_back(n + 1);
    return out;
}

Index MultiShape::ambient_size(const FactorSubset& u) const
{
    Index product = 1;
    for (int i : u.members())
        product *= size(i);
    return product;
}

Index MultiShape::ambient_size() const
{
    Index product = 1;
    for (int n : dims_)
        product *= n + 1;
    return product;
}

int MultiShape::max_dim() const { return *std::max_element(dims_.begin(), dims_.end()); }

int MultiShape::min_dim() const { return *std::min_element(dims_.begin(), dims_.end()); }

std::string MultiShape::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i > 0)
            out += "x";
        out += std::to_string(dims_[i] + 1);
    }
    return out;
}

// FactorSubset ----------------------------------------------------------------

FactorSubset::FactorSubset(std::vector<int> members, int order) : members_(std::move(members))
{
    if (members_.empty())
        throw PreconditionError("factor subset must be nonempty");
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw PreconditionError("factor subset has repeated members");
    if (members_.front() < 0 || members_.back() >= order)
        throw PreconditionError("factor index out of range");
}

FactorSubset FactorSubset::full(int order)
{
    std::vector<int> all(static_cast<std::size_t>(order));
    std::iota(all.begin(), all.end(), 0);
    return FactorSubset(std::move(all), order);
}

FactorSubset FactorSubset::parse(std::string_view text, int order)
{
    std::vector<int> members;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw ParseError("bad factor index \"" + std::string(item) + "\"");
        members.push_back(value - 1);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return FactorSubset(std::move(members), order);
}

FactorSubset FactorSubset::from_mask(unsigned mask, int order)
{
    std::vector<int> members;
    for (int i = 0; i < order; ++i)
        if (mask & (1u << i))
            members.push_back(i);
    return FactorSubset(std::move(members), order);
}

bool FactorSubset::contains(int factor) const
{
    return std::binary_search(members_.begin(), members_.end(), factor);
}

unsigned FactorSubset::mask() const
{
    unsigned m = 0;
    for (int i : members_)
        m |= 1u << i;
    return m;
}

std::optional<FactorSubset> FactorSubset::complement(int order) const
{
    std::vector<int> rest;
    for (int i = 0; i < order; ++i)
        if (!contains(i))
            rest.push_back(i);
    if (rest.empty())
        return std::nullopt;
    return FactorSubset(std::move(rest), order);
}

std::string FactorSubset::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(members_[i] + 1);
    }
    return out;
}

// FactorPartition -------------------------------------------------------------

FactorPartition FactorPartition::from_F(const FactorSubset& F, int order)
{
    auto E = F.complement(order);
    if (!E)
        throw PreconditionError("partition needs a nonempty E");
    return {*E, F};
}

FactorPartition FactorPartition::parse(std::string_view text, int order)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw ParseError("partition must look like \"1,2/3\"");
    FactorSubset E = FactorSubset::parse(text.substr(0, slash), order);
    FactorSubset F = FactorSubset::parse(text.substr(slash + 1), order);
    if ((E.mask() & F.mask()) != 0 || (E.mask() | F.mask()) != (1u << order) - 1)
        throw PreconditionError("\"" + std::string(text) + "\" is not a partition of the factors");
    return {std::move(E), std::move(F)};
}

std::vector<FactorPartition> FactorPartition::enumerate(int order)
{
    std::vector<FactorPartition> out;
    if (order < 2)
        return out;
    const unsigned all = (1u << order) - 1;
    for (unsigned mask = 1; mask < all; ++mask)
        out.push_back(from_F(FactorSubset::from_mask(mask, order), order));
    return out;
}

std::string FactorPartition::to_string() const { return E.to_string() + "/" + F.to_string(); }

// Points ----------------------------------------------------------------------

bool proportional(const VectorXq& a, const VectorXq& b)
{
    if (a.size() != b.size())
        return false;
    // a ~ b iff all 2x2 minors a_i b_j - a_j b_i vanish; compare against the
    // first nonzero coordinate of a.
    Index lead = 0;
    while (lead < a.size() && a(lead) == 0)
        ++lead;
    if (lead == a.size())
        return all_zero(b);
    for (Index j = 0; j < a.size(); ++j)
        if (a(lead) * b(j) != a(j) * b(lead))
            return false;
    return b(lead) != 0;
}

MultiPoint::MultiPoint(std::vector<VectorXq> factors) : factors_(std::move(factors))
{
    if (factors_.empty())
        throw PreconditionError("a point needs at least one factor");
    for (const auto& f : factors_)
        if (f.size() == 0 || all_zero(f))
            throw PreconditionError("point factors must be nonzero vectors");
}

bool MultiPoint::conforms(const MultiShape& shape) const
{
    if (order() != shape.order())
        return false;
    for (int i = 0; i < order(); ++i)
        if (factor(i).size() != shape.size(i))
            return false;
    return true;
}

bool MultiPoint::operator==(const MultiPoint& other) const
{
    if (order() != other.order())
        return false;
    for (int i = 0; i < order(); ++i)
        if (!proportional(factor(i), other.factor(i)))
            return false;
    return true;
}

PointSet::PointSet(MultiShape shape, std::vector<MultiPoint> points)
    : shape_(std::move(shape)), points_(std::move(points))
{
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!points_[i].conforms(shape_))
            throw PreconditionError("point " + std::to_string(i + 1) + " does not match shape " +
                                    shape_.to_string());
        for (std::size_t j = 0; j < i; ++j)
            if (points_[i] == points_[j])
                throw PreconditionError("points " + std::to_string(j + 1) + " and " +
                                        std::to_string(i + 1) + " coincide");
    }
}

bool PointSet::contains(const MultiPoint& p) const
{
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointSet PointSet::without(Index i) const
{
    std::vector<MultiPoint> rest = points_;
    rest.erase(rest.begin() + i);
    PointSet out;
    out.shape_ = shape_;
    out.points_ = std::move(rest);
    return out;
}

PointSet set_union(const PointSet& a, const PointSet& b)
{
    if (!(a.shape() == b.shape()))
        throw PreconditionError("point sets live in different products");
    std::vector<MultiPoint> pts = a.points();
    for (const auto& p : b)
        if (!a.contains(p))
            pts.push_back(p);
    return PointSet(a.shape(), std::move(pts));
}

PointSet set_intersection(const PointSet& a, const PointSet& b)
{
    if (!(a.shape() == b.shape()))
        throw PreconditionError("point sets live in different products");
    std::vector<MultiPoint> pts;
    for (const auto& p : a)
        if (b.contains(p))
            pts.push_back(p);
    return PointSet(a.shape(), std::move(pts));
}

AmbientTensor::AmbientTensor(MultiShape shape, VectorXq coords)
    : shape_(std::move(shape)), coords_(std::move(coords))
{
    if (coords_.size() != shape_.ambient_size())
        throw PreconditionError("tensor has " + std::to_string(coords_.size()) +
                                " coordinates, shape " + shape_.to_string() + " needs " +
                                std::to_string(shape_.ambient_size()));
    if (all_zero(coords_))
        throw PreconditionError("the zero tensor is not a projective point");
}

bool AmbientTensor::operator==(const AmbientTensor& other) const
{
    return shape_ == other.shape_ && proportional(coords_, other.coords_);
}

// Segre -----------------------------------------------------------------------

VectorXq segre_vector(const MultiPoint& p, const FactorSubset& u)
{
    VectorXq out = VectorXq::Ones(1);
    for (int i : u.members()) {
        const VectorXq& f = p.factor(i);
        VectorXq next(out.size() * f.size());
        for (Index a = 0; a < out.size(); ++a)
            next.segment(a * f.size(), f.size()) = out(a) * f;
        out = std::move(next);
    }
    return out;
}

MatrixXq segre_matrix(const PointSet& S, const FactorSubset& u)
{
    MatrixXq m(S.size(), S.shape().ambient_size(u));
    for (Index i = 0; i < S.size(); ++i)
        m.row(i) = segre_vector(S[i], u).transpose();
    return m;
}

MatrixXq factor_matrix(const PointSet& S, int factor)
{
    MatrixXq m(S.shape().size(factor), S.size());
    for (Index j = 0; j < S.size(); ++j)
        m.col(j) = S[j].factor(factor);
    return m;
}

Cohomology cohomology(const PointSet& S, const FactorSubset& u)
{
    const Index rank = rat_rank(segre_matrix(S, u));
    return {S.shape().ambient_size(u) - rank, S.size() - rank, rank};
}

std::vector<Index> segre_function(const PointSet& S)
{
    std::vector<Index> out;
    std::vector<int> prefix;
    for (int i = 0; i < S.shape().order(); ++i) {
        prefix.push_back(i);
        out.push_back(rat_rank(segre_matrix(S, FactorSubset(prefix, S.shape().order()))));
    }
    return out;
}

bool has_different_coordinates(const PointSet& S)
{
    for (int f = 0; f < S.shape().order(); ++f)
        for (Index i = 0; i < S.size(); ++i)
            for (Index j = 0; j < i; ++j)
                if (proportional(S[i].factor(f), S[j].factor(f)))
                    return false;
    return true;
}

Degeneracy is_degenerate(const PointSet& S)
{
    for (int f = 0; f < S.shape().order(); ++f)
        if (rat_rank(factor_matrix(S, f)) < S.shape().size(f))
            return {true, f};
    return {};
}

AmbientTensor assemble_tensor(std::span<const Rational> weights, const PointSet& S)
{
    if (static_cast<Index>(weights.size()) != S.size())
        throw PreconditionError("need one weight per point");
    const FactorSubset all = FactorSubset::full(S.shape().order());
    VectorXq sum = VectorXq::Zero(S.shape().ambient_size());
    for (Index i = 0; i < S.size(); ++i) {
        if (weights[static_cast<std::size_t>(i)] == 0)
            throw PreconditionError("weights must be nonzero");
        sum += weights[static_cast<std::size_t>(i)] * segre_vector(S[i], all);
    }
    if (all_zero(sum))
        throw PreconditionError("weights annihilate the decomposition");
    return AmbientTensor(S.shape(), std::move(sum));
}

} // namespace tensorcert
