#include "tensorcert/construct.hpp"

#include "tensorcert/errors.hpp"

namespace tensorcert {

namespace {

constexpr int kSampleAttempts = 1000;

std::int64_t draw_nonzero(std::mt19937_64& rng, int box)
{
    std::int64_t v = 0;
    while (v == 0)
        v = draw(rng, -box, box);
    return v;
}

VectorXq random_vector(std::mt19937_64& rng, Index size, int box)
{
    VectorXq v(size);
    v(0) = draw_nonzero(rng, box);
    for (Index i = 1; i < size; ++i)
        v(i) = draw(rng, -box, box);
    return v;
}

MultiPoint replace_factor(const MultiPoint& p, int factor, VectorXq value)
{
    std::vector<VectorXq> factors = p.factors();
    factors[static_cast<std::size_t>(factor)] = std::move(value);
    return MultiPoint(std::move(factors));
}

std::vector<MultiPoint> with_replacement(const PointSet& A, Index at, std::vector<MultiPoint> extra)
{
    std::vector<MultiPoint> out;
    for (Index j = 0; j < A.size(); ++j)
        if (j != at)
            out.push_back(A[j]);
    for (auto& p : extra)
        out.push_back(std::move(p));
    return out;
}

// One pass of the splitting construction; nullopt when the random choices
// were unlucky (coincident points, a degenerate line, ...).
std::optional<Decomposition> try_augment(const AmbientTensor& T, const PointSet& A,
                                         std::mt19937_64& rng)
{
    const MultiShape& shape = A.shape();
    const FactorSubset all = FactorSubset::full(shape.order());
    PointSet current = A;
    Index at = draw(rng, 0, A.size() - 1);

    for (int i = 0; i < shape.order(); ++i) {
        if (shape.dim(i) == 0)
            continue;
        const MultiPoint P = current[at];
        const VectorXq b = random_vector(rng, shape.size(i), kDefaultBox);
        if (proportional(b, P.factor(i)))
            return std::nullopt;
        const MultiPoint O = replace_factor(P, i, b);
        if (current.contains(O))
            return std::nullopt;

        const MatrixXq span = segre_matrix(current, all);
        if (in_row_span(segre_vector(O, all), span)) {
            // The slice through P along factor i lies in <ν(A)>: swap P for O
            // (same span) and move on to the next factor.
            current = PointSet(shape, with_replacement(current, at, {O}));
            at = current.size() - 1;
            continue;
        }

        // c = p_i - t b puts p_i on the line through b and c.
        Rational t = draw_nonzero(rng, kDefaultBox);
        const VectorXq c = P.factor(i) - t * b;
        if (all_zero(c) || proportional(c, b))
            return std::nullopt;
        const MultiPoint Q = replace_factor(P, i, c);
        if (current.contains(Q))
            return std::nullopt;

        PointSet S(shape, with_replacement(current, at, {O, Q}));
        const auto coeffs = row_span_coefficients(T.coords(), segre_matrix(S, all));
        if (!coeffs)
            return std::nullopt;
        Decomposition out{std::move(S), {}};
        for (Index j = 0; j < coeffs->size(); ++j)
            out.weights.push_back((*coeffs)(j));
        return out;
    }
    return std::nullopt;
}

} // namespace

RngSeed derive_seed(RngSeed seed, std::uint64_t index)
{
    std::uint64_t z = seed.value + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return {z ^ (z >> 31)};
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return lo + static_cast<std::int64_t>(x % span);
}

Decomposition random_decomposition(const MultiShape& shape, Index r, int box, RngSeed seed)
{
    if (r < 1)
        throw PreconditionError("need r >= 1");
    if (box < 1)
        throw PreconditionError("need box >= 1");
    std::mt19937_64 rng(seed.value);

    for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
        std::vector<MultiPoint> pts;
        for (Index j = 0; j < r; ++j) {
            std::vector<VectorXq> factors;
            for (int i = 0; i < shape.order(); ++i)
                factors.push_back(random_vector(rng, shape.size(i), box));
            pts.emplace_back(std::move(factors));
        }
        std::vector<Rational> weights;
        for (Index j = 0; j < r; ++j)
            weights.emplace_back(draw_nonzero(rng, box));

        bool distinct = true;
        for (std::size_t a = 0; a < pts.size() && distinct; ++a)
            for (std::size_t b = 0; b < a && distinct; ++b)
                distinct = !(pts[a] == pts[b]);
        if (!distinct)
            continue;
        PointSet S(shape, std::move(pts));
        if (has_different_coordinates(S))
            return {std::move(S), std::move(weights)};
    }
    throw PreconditionError("could not sample " + std::to_string(r) +
                            " points with different coordinates in shape " + shape.to_string());
}

SymPointSet random_sym_points(int n, Index count, int box, RngSeed seed)
{
    std::mt19937_64 rng(seed.value);
    for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
        std::vector<VectorXq> pts;
        for (Index j = 0; j < count; ++j)
            pts.push_back(random_vector(rng, n + 1, box));
        bool distinct = true;
        for (std::size_t a = 0; a < pts.size() && distinct; ++a)
            for (std::size_t b = 0; b < a && distinct; ++b)
                distinct = !proportional(pts[a], pts[b]);
        if (distinct)
            return SymPointSet(n, std::move(pts));
    }
    throw PreconditionError("could not sample distinct points");
}

Augmentation augment_decomposition(const Decomposition& A, RngSeed seed, int retries)
{
    const PointSet& pts = A.points;
    const MultiShape& shape = pts.shape();
    if (pts.empty())
        throw PreconditionError("decomposition is empty");
    if (pts.size() > shape.projective_dim())
        throw PreconditionError("augmentation needs #A <= M = " +
                                std::to_string(shape.projective_dim()));
    if (shape.max_dim() == 0)
        throw PreconditionError("augmentation needs some n_i > 0");
    if (cohomology(pts, FactorSubset::full(shape.order())).h1 != 0)
        throw PreconditionError("ν(A) must be linearly independent");

    const AmbientTensor T = A.tensor();
    std::string last_failure = "no candidate produced";
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)).value);
        auto candidate = try_augment(T, pts, rng);
        if (!candidate)
            continue;
        Certificate cert = check_non_redundant(T, candidate->points);
        if (cert.certified())
            return {std::move(*candidate), std::move(cert), attempt + 1};
        for (const auto& h : cert.hypotheses)
            if (!h.holds()) {
                last_failure = h.name;
                break;
            }
    }
    throw PreconditionError("augmentation failed after " + std::to_string(retries) +
                            " attempts; last failing hypothesis: " + last_failure);
}

SurveyReport survey(const std::vector<MultiShape>& shapes, Index r_min, Index r_max, int trials,
                    RngSeed seed, int box)
{
    if (trials < 1)
        throw PreconditionError("need trials >= 1");
    SurveyReport report;
    std::uint64_t cell = 0;
    for (const auto& shape : shapes) {
        for (Index r = r_min; r <= r_max; ++r, ++cell) {
            SurveyRow row{shape, r, trials};
            const RngSeed cell_seed = derive_seed(seed, cell);
            for (int t = 0; t < trials; ++t) {
                Decomposition d;
                try {
                    d = random_decomposition(shape, r, box,
                                             derive_seed(cell_seed, static_cast<std::uint64_t>(t)));
                } catch (const PreconditionError&) {
                    ++row.sampling_failures;
                    continue;
                }
                const Comparison c = compare_criteria(d.tensor(), d.points);
                row.exact_rank += c.exact_rank.certified();
                row.ee4 += c.ee4.certified();
                row.kruskal += c.kruskal_applies;
                row.flattening_only += c.flattening_only;
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace tensorcert
