// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "oracles.hpp"
#include "tensorcert/certify.hpp"
#include "tensorcert/construct.hpp"
#include "tensorcert/errors.hpp"
#include "tensorcert/exact_linalg.hpp"
#include "tensorcert/kruskal.hpp"
#include "tensorcert/symmetric.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace tensorcert;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// Pinned thresholds.
constexpr int kC1Trials = 100;
constexpr int kC1MinExact = 99;
constexpr double kC1Seconds = 10.0;
constexpr int kC2Trials = 200;
constexpr double kC2Seconds = 10.0;
constexpr int kC3Trials = 100;
constexpr double kC3Seconds = 10.0;
constexpr int kC4Trials = 100;
constexpr int kC4MaxCols = 8;
constexpr double kC4Seconds = 30.0;
constexpr int kC5TrialsPerShape = 100;
constexpr int kC6Runs = 100;
constexpr int kC6MinDistinct = 95;
constexpr int kC7Trials = 100;
constexpr int kC8Instances = 50;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

std::int64_t value_of(const Certificate& c, const std::string& key)
{
    if (c.conclusion)
        for (const auto& [k, v] : c.conclusion->values)
            if (k == key)
                return v;
    return -1;
}

Decomposition nondegenerate(const MultiShape& shape, Index r, RngSeed seed, int& resampled)
{
    for (std::uint64_t attempt = 0;; ++attempt) {
        auto d = random_decomposition(shape, r, kDefaultBox, derive_seed(seed, attempt));
        if (!is_degenerate(d.points).degenerate)
            return d;
        ++resampled;
    }
}

// 1. 3x4x6 exact rank ------------------------------------------------------------

Outcome criterion1()
{
    const auto start = Clock::now();
    const MultiShape shape({2, 3, 5});
    const auto partition = FactorPartition::parse("1,2/3", 3);
    int exact = 0, kruskal_na = 0, resampled = 0;
    for (int t = 0; t < kC1Trials; ++t) {
        const auto d = nondegenerate(shape, 6, derive_seed(RngSeed{kSeed + 1}, t), resampled);
        const auto cert = certify_exact_rank(d.tensor(), d.points, partition);
        exact += cert.certified() && cert.claim == Claim::ExactRank && value_of(cert, "rank") == 6;
        const auto k = kruskal_certificate(d.points);
        kruskal_na += !k.applies && k.condition_lhs <= 13 && k.condition_rhs == 14;
    }
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "ExactRank 6 on " << exact << "/" << kC1Trials << " (need >= " << kC1MinExact
       << "), Kruskal not applicable on " << kruskal_na << "/" << kC1Trials << ", " << resampled
       << " degenerate samples resampled, " << fmt_seconds(s);
    return {exact >= kC1MinExact && kruskal_na == kC1Trials && s < kC1Seconds, os.str()};
}

// 2. k = 2 matrix oracle -------------------------------------------------------

Outcome criterion2()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(kSeed + 2);
    int non_redundant = 0, bound_equal = 0, iff_ok = 0;
    int small_cases = 0, small_equal = 0, bound_le = 0;
    for (int t = 0; t < kC2Trials; ++t) {
        const int n1 = static_cast<int>(draw(rng, 1, 4));
        const int n2 = static_cast<int>(draw(rng, 1, 6));
        const Index r = draw(rng, 1, 5);
        const auto d = random_decomposition(MultiShape({n1, n2}), r, kDefaultBox,
                                            derive_seed(RngSeed{kSeed + 2}, t));
        const AmbientTensor T = d.tensor();
        MatrixXq m(n1 + 1, n2 + 1);
        for (int i = 0; i <= n1; ++i)
            for (int j = 0; j <= n2; ++j)
                m(i, j) = T.coords()(i * (n2 + 1) + j);
        const int matrix_rank = oracle::rank(m);

        iff_ok += certify_exact_rank(T, d.points).certified() == (r == matrix_rank);
        if (!check_non_redundant(T, d.points).certified())
            continue;
        ++non_redundant;
        const Index bound = bound_cactus_rank(d.points).best_bound;
        bound_equal += bound == matrix_rank;
        bound_le += bound <= matrix_rank;
        if (r <= std::max(n1, n2) + 1) {
            ++small_cases;
            small_equal += bound == matrix_rank;
        }
    }
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "best bound = matrix rank on " << bound_equal << "/" << non_redundant
       << " non-redundant cases (need all); exact-rank iff r = matrix rank on " << iff_ok << "/"
       << kC2Trials << "; bound <= matrix rank on " << bound_le << "/" << non_redundant
       << "; equality on " << small_equal << "/" << small_cases
       << " cases with r <= max(d1,d2); " << fmt_seconds(s);
    return {bound_equal == non_redundant && iff_ok == kC2Trials && s < kC2Seconds, os.str()};
}

// 3. Symmetric certificates ---------------------------------------------------

Outcome criterion3()
{
    const auto start = Clock::now();
    int certified = 0;
    for (int t = 0; t < kC3Trials; ++t) {
        const auto A = random_sym_points(2, 10, kDefaultBox, derive_seed(RngSeed{kSeed + 3}, t));
        const auto T = assemble_symmetric(std::vector<Rational>(10, 1), A, 6);
        const auto cert = comon_certify(T, A, 6);
        certified += cert.certified() && value_of(cert, "rank") == 10;
    }
    const auto b26 = symmetric_bounds(2, 6);
    const auto b28 = symmetric_bounds(2, 8);
    const auto b34 = symmetric_bounds(3, 4);
    const bool bounds_ok = b26.r0 == 10 && b26.rg == 10 && !b26.exceptional && b28.r0 == 15 &&
                           b28.rg == 15 && !b28.exceptional && b34.rg == 9 && b34.exceptional &&
                           b34.generic_rank == 10;
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "rank 10 certified on " << certified << "/" << kC3Trials << "; bounds (2,6) = (" << b26.r0
       << "," << b26.rg << "," << b26.exceptional << "), (2,8) = (" << b28.r0 << "," << b28.rg
       << "," << b28.exceptional << "), (3,4) rg = " << b34.rg << " exceptional "
       << b34.exceptional << " generic " << b34.generic_rank << "; " << fmt_seconds(s);
    return {certified == kC3Trials && bounds_ok && s < kC3Seconds, os.str()};
}

// 4. Kruskal rank against the definition ---------------------------------------

Outcome criterion4()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(kSeed + 4);
    int agree = 0;
    for (int t = 0; t < kC4Trials; ++t) {
        const int rows = static_cast<int>(draw(rng, 1, 6));
        const int cols = static_cast<int>(draw(rng, 1, kC4MaxCols));
        MatrixXq m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m(i, j) = Rational(draw(rng, -3, 3), draw(rng, 1, 4));
        // plant short circuits in a third of the cases
        if (cols >= 3 && t % 3 == 0)
            m.col(cols - 1) = m.col(0) * Rational(draw(rng, 1, 5), 7) + m.col(1);
        for (int j = 0; j < cols; ++j)
            if (all_zero(m.col(j)))
                m(0, j) = 1;
        agree += kruskal_rank(m) == oracle::kruskal_rank(m);
    }
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "optimized = exhaustive on " << agree << "/" << kC4Trials << "; " << fmt_seconds(s);
    return {agree == kC4Trials && s < kC4Seconds, os.str()};
}

// 5. Span intersection identity ----------------------------------------------

MultiPoint small_point(const MultiShape& shape, std::mt19937_64& rng)
{
    std::vector<VectorXq> factors;
    for (int i = 0; i < shape.order(); ++i) {
        VectorXq v(shape.size(i));
        do {
            for (Index j = 0; j < v.size(); ++j)
                v(j) = draw(rng, -2, 2);
        } while (all_zero(v));
        factors.push_back(v);
    }
    return MultiPoint(std::move(factors));
}

Outcome criterion5()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(kSeed + 5);
    int eligible = 0, passed = 0, pairs = 0;
    for (const MultiShape& shape :
         {MultiShape({1, 1}), MultiShape({1, 1, 1}), MultiShape({2, 2})}) {
        const Index cap = shape.ambient_size();
        for (int t = 0; t < kC5TrialsPerShape; ++t) {
            const int overlap = t % 3;
            const Index a = draw(rng, std::max(overlap, 1), std::min<Index>(cap, overlap + 3));
            const Index b = draw(rng, std::max(overlap, 1), std::min<Index>(cap, overlap + 3));
            std::vector<MultiPoint> pool;
            while (static_cast<Index>(pool.size()) < a + b - overlap) {
                MultiPoint p = small_point(shape, rng);
                if (std::find(pool.begin(), pool.end(), p) == pool.end())
                    pool.push_back(std::move(p));
            }
            // pool = shared | only A | only B
            std::vector<MultiPoint> A(pool.begin(), pool.begin() + a);
            std::vector<MultiPoint> B(pool.begin(), pool.begin() + overlap);
            B.insert(B.end(), pool.begin() + a, pool.end());
            const auto cert = verify_prop_bb(PointSet(shape, A), PointSet(shape, B));
            ++pairs;
            if (cert.hypotheses[0].status != Status::Pass || cert.hypotheses[1].status != Status::Pass)
                continue;
            ++eligible;
            passed += cert.certified();
        }
    }
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "identity holds on " << passed << "/" << eligible << " pairs meeting the preconditions ("
       << pairs << " generated); " << fmt_seconds(s);
    return {passed == eligible && eligible > 0, os.str()};
}

// 6. Augmentation ----------------------------------------------------------------

bool same_points(const PointSet& a, const PointSet& b)
{
    if (a.size() != b.size())
        return false;
    return std::all_of(a.begin(), a.end(), [&](const MultiPoint& p) { return b.contains(p); });
}

Outcome criterion6()
{
    const auto start = Clock::now();
    struct Cell {
        MultiShape shape;
        Index r;
    };
    std::vector<Cell> valid, rejected;
    for (const MultiShape& shape : {MultiShape({1, 1}), MultiShape({2, 3, 5})})
        for (Index r = 1; r <= 4; ++r)
            (r <= shape.projective_dim() ? valid : rejected).push_back({shape, r});

    int good = 0, distinct = 0, errors = 0;
    for (int run = 0; run < kC6Runs; ++run) {
        const Cell& cell = valid[static_cast<std::size_t>(run) % valid.size()];
        const RngSeed seed = derive_seed(RngSeed{kSeed + 6}, run);
        try {
            const auto A = random_decomposition(cell.shape, cell.r, kDefaultBox, seed);
            const auto s1 = augment_decomposition(A, derive_seed(seed, 1));
            const auto s2 = augment_decomposition(A, derive_seed(seed, 2));
            const bool ok1 = s1.decomposition.points.size() == cell.r + 1 &&
                             check_non_redundant(A.tensor(), s1.decomposition.points).certified();
            const bool ok2 = s2.decomposition.points.size() == cell.r + 1 &&
                             check_non_redundant(A.tensor(), s2.decomposition.points).certified();
            good += ok1 && ok2;
            distinct += !same_points(s1.decomposition.points, s2.decomposition.points);
        } catch (const PreconditionError&) {
            ++errors;
        }
    }
    int refused = 0;
    for (const Cell& cell : rejected) {
        try {
            augment_decomposition(random_decomposition(cell.shape, cell.r, kDefaultBox, RngSeed{kSeed}),
                                  RngSeed{kSeed});
        } catch (const PreconditionError&) {
            ++refused;
        }
    }
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "#S = r+1 and non-redundant on " << good << "/" << kC6Runs << " paired runs, distinct S on "
       << distinct << "/" << kC6Runs << " (need >= " << kC6MinDistinct << "), " << errors
       << " errors; " << refused << "/" << rejected.size()
       << " (shape, r) cells with #A > M refused by precondition; " << fmt_seconds(s);
    return {good == kC6Runs && distinct >= kC6MinDistinct && errors == 0 &&
                refused == static_cast<int>(rejected.size()),
            os.str()};
}

// 7. 3x2x2x2 minimality and identifiability ------------------------------------

Outcome criterion7()
{
    const auto start = Clock::now();
    const MultiShape shape({2, 1, 1, 1});
    int identifiable = 0, minimal_only = 0;
    for (int t = 0; t < kC7Trials; ++t) {
        const auto two =
            random_decomposition(shape, 2, kDefaultBox, derive_seed(RngSeed{kSeed + 7}, 2 * t));
        const auto c2 = certify_ee4(two.tensor(), two.points);
        identifiable += c2.certified() && c2.claim == Claim::Identifiable;
        const auto three =
            random_decomposition(shape, 3, kDefaultBox, derive_seed(RngSeed{kSeed + 7}, 2 * t + 1));
        const auto c3 = certify_ee4(three.tensor(), three.points);
        minimal_only += c3.certified() && c3.claim == Claim::MinimalRank;
    }
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "r = 2 Identifiable on " << identifiable << "/" << kC7Trials << ", r = 3 MinimalRank only on "
       << minimal_only << "/" << kC7Trials << "; " << fmt_seconds(s);
    return {identifiable == kC7Trials && minimal_only == kC7Trials, os.str()};
}

// 8. Invariance -------------------------------------------------------------------

std::vector<Certificate> all_certificates(const AmbientTensor& T, const PointSet& S)
{
    const int k = S.shape().order();
    std::vector<Certificate> out{check_non_redundant(T, S),
                                 bound_certificate(S, bound_cactus_rank(S)),
                                 certify_exact_rank(T, S), certify_ee4(T, S)};
    if (k >= 2) {
        out.push_back(obstruct_alt_decompositions(S, 1));
        std::vector<FactorSubset> singles;
        for (int i = 0; i < k; ++i)
            singles.push_back(FactorSubset::from_mask(1u << i, k));
        out.push_back(pin_projections(T, S, singles, std::vector<bool>(k, true)));
    }
    return out;
}

Rational random_scalar(std::mt19937_64& rng)
{
    std::int64_t p = 0;
    while (p == 0)
        p = draw(rng, -7, 7);
    return Rational(p, draw(rng, 1, 5));
}

unsigned permute_mask(unsigned mask, const std::vector<int>& perm)
{
    // factor i of the original becomes factor perm[i]
    unsigned out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (mask & (1u << i))
            out |= 1u << perm[i];
    return out;
}

Outcome criterion8()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(kSeed + 8);
    int scale_ok = 0, perm_ok = 0;
    for (int t = 0; t < kC8Instances; ++t) {
        const int k = static_cast<int>(draw(rng, 2, 4));
        std::vector<int> dims;
        for (int i = 0; i < k; ++i)
            dims.push_back(static_cast<int>(draw(rng, 1, 3)));
        const MultiShape shape(dims);
        const Index r = draw(rng, 1, std::min<Index>(6, shape.ambient_size() - 1));
        const auto d = random_decomposition(shape, r, 5, derive_seed(RngSeed{kSeed + 8}, t));
        const AmbientTensor T = d.tensor();
        const auto reference = all_certificates(T, d.points);

        // rescaled representatives
        std::vector<MultiPoint> scaled;
        for (const auto& p : d.points) {
            std::vector<VectorXq> f = p.factors();
            for (auto& v : f)
                v *= random_scalar(rng);
            scaled.emplace_back(std::move(f));
        }
        const AmbientTensor T_scaled(shape, T.coords() * random_scalar(rng));
        scale_ok += all_certificates(T_scaled, PointSet(shape, scaled)) == reference;

        // factor permutation
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> pdims(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            pdims[static_cast<std::size_t>(perm[i])] = dims[static_cast<std::size_t>(i)];
        const MultiShape pshape(pdims);
        std::vector<MultiPoint> ppoints;
        for (const auto& p : d.points) {
            std::vector<VectorXq> f(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                f[static_cast<std::size_t>(perm[i])] = p.factor(i);
            ppoints.emplace_back(std::move(f));
        }
        const PointSet pS(pshape, ppoints);
        const AmbientTensor pT = assemble_tensor(d.weights, pS);
        const auto permuted = all_certificates(pT, pS);

        bool ok = true;
        for (std::size_t c = 0; c < reference.size(); ++c)
            ok = ok && reference[c].claim == permuted[c].claim &&
                 reference[c].certified() == permuted[c].certified() &&
                 reference[c].hypotheses.size() == permuted[c].hypotheses.size() &&
                 (!reference[c].conclusion ||
                  reference[c].conclusion->values == permuted[c].conclusion->values ||
                  reference[c].claim == Claim::ProjectionPinning);
        const auto rb = bound_cactus_rank(d.points);
        const auto pb = bound_cactus_rank(pS);
        ok = ok && rb.best_bound == pb.best_bound;
        for (const auto& entry : rb.per_partition) {
            const unsigned target = permute_mask(entry.partition.F.mask(), perm);
            const auto it = std::find_if(pb.per_partition.begin(), pb.per_partition.end(),
                                         [&](const PartitionBound& b) { return b.partition.F.mask() == target; });
            ok = ok && it != pb.per_partition.end() && it->applicable == entry.applicable &&
                 it->bound == entry.bound && it->h1_E == entry.h1_E && it->h0_F == entry.h0_F;
        }
        if (reference.size() > 5 && reference[5].conclusion) {
            const auto mask = static_cast<unsigned>(value_of(reference[5], "pinned_mask"));
            ok = ok && permute_mask(mask, perm) ==
                           static_cast<unsigned>(value_of(permuted[5], "pinned_mask"));
        }
        const auto rk = kruskal_certificate(d.points).per_factor_kruskal_rank;
        const auto pk = kruskal_certificate(pS).per_factor_kruskal_rank;
        for (int i = 0; i < k; ++i)
            ok = ok && rk[static_cast<std::size_t>(i)] == pk[static_cast<std::size_t>(perm[i])];
        perm_ok += ok;
    }
    const double s = seconds_since(start);
    std::ostringstream os;
    os << "rescaling leaves certificates identical on " << scale_ok << "/" << kC8Instances
       << ", factor permutation maps partitions and witnesses consistently on " << perm_ok << "/"
       << kC8Instances << "; " << fmt_seconds(s);
    return {scale_ok == kC8Instances && perm_ok == kC8Instances, os.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 3x4x6 reproduction", criterion1},
        {"2 k=2 matrix oracle", criterion2},
        {"3 symmetric certificates", criterion3},
        {"4 Kruskal-rank oracle", criterion4},
        {"5 span-intersection identity", criterion5},
        {"6 augmentation", criterion6},
        {"7 3x2x2x2 identifiability", criterion7},
        {"8 invariance", criterion8},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
