#pragma once

#include "tensorcert/kruskal.hpp"
#include "tensorcert/symmetric.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tensorcert {

struct RngSeed {
    std::uint64_t value = 0;
};

/// Independent stream for sub-task `index` of a seeded run (splitmix64 mix).
RngSeed derive_seed(RngSeed seed, std::uint64_t index);

/// Uniform integer in [lo, hi] from the standard-defined mt19937_64 output.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

struct Decomposition {
    PointSet points;
    std::vector<Rational> weights;

    AmbientTensor tensor() const { return assemble_tensor(weights, points); }
};

inline constexpr int kDefaultBox = 9;
inline constexpr int kDefaultRetries = 32;

/// r points with integer coordinates in [-box, box] (first coordinate of each
/// factor nonzero) and nonzero integer weights in the same range, resampled
/// until the points are distinct with different coordinates.
/// Throws PreconditionError when resampling keeps failing.
Decomposition random_decomposition(const MultiShape& shape, Index r, int box, RngSeed seed);

/// `count` distinct points of P^n with integer coordinates in [-box, box].
SymPointSet random_sym_points(int n, Index count, int box, RngSeed seed);

struct Augmentation {
    Decomposition decomposition;
    Certificate certificate; ///< NonRedundant certificate of the result for T
    int attempts = 0;
};

/// A non-redundant decomposition of T with #A + 1 points: one point P of A is
/// split into two points O, Q that differ from P in a single factor and
/// whose Segre images span a line through ν(P). Random choices are verified
/// exactly and retried up to `retries` times.
/// Throws PreconditionError if ν(A) is dependent, #A > M, every n_i = 0,
/// or no attempt verifies.
Augmentation augment_decomposition(const Decomposition& A, RngSeed seed,
                                   int retries = kDefaultRetries);

struct SurveyRow {
    MultiShape shape;
    Index r = 0;
    int trials = 0;
    int exact_rank = 0;        ///< certify_exact_rank certified
    int ee4 = 0;               ///< certify_ee4 certified
    int kruskal = 0;           ///< Kruskal baseline applies
    int flattening_only = 0;   ///< a flattening criterion applies, Kruskal does not
    int sampling_failures = 0; ///< no valid random instance for this trial
};

struct SurveyReport {
    std::vector<SurveyRow> rows;
};

SurveyReport survey(const std::vector<MultiShape>& shapes, Index r_min, Index r_max, int trials,
                    RngSeed seed, int box = kDefaultBox);

} // namespace tensorcert
