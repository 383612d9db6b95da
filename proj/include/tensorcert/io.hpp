#pragma once

#include "tensorcert/construct.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tensorcert {

using Json = nlohmann::ordered_json;

struct SymmetricInstance {
    int n = 1;
    int degree = 1;
    SymPointSet points;
    std::vector<Rational> weights;

    VectorXq tensor() const { return assemble_symmetric(weights, points, degree); }
};

/// Contents of an instance file:
///
///   { "dims": [3, 4, 6],                        // factor sizes n_i + 1
///     "points": [[["1","0","2"], [...], [...]], ...],
///     "weights": ["1", "-2/3", ...],            // optional, default all "1"
///     "tensor": ["...", ...],                    // optional, last index fastest
///     "points_b": [...],                         // optional second set (bb-check)
///     "symmetric": { "n": 2, "k": 6, "points": [["1","2","3"], ...],
///                    "weights": [...] } }        // optional
struct Instance {
    std::optional<Decomposition> decomposition;
    std::optional<VectorXq> tensor_coords;
    std::optional<PointSet> points_b;
    std::optional<SymmetricInstance> symmetric;

    /// The supplied tensor, else the one assembled from points and weights.
    AmbientTensor tensor() const;
};

/// Throws ParseError on malformed JSON or values, PreconditionError when the
/// values are well formed but inconsistent (shape mismatch, duplicate points,
/// tensor disagreeing with points and weights).
Instance parse_instance(std::string_view text);
Json to_json(const Instance& instance);

Json to_json(const VectorXq& v);
Json to_json(const MultiPoint& p);
Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const BoundReport& report);
Json to_json(const KruskalReport& report);
Json to_json(const Comparison& comparison);
Json to_json(const SymmetricBounds& bounds);
Json to_json(const SurveyReport& report);

/// One line per hypothesis (PASS / FAIL / ASSERTED (not verified)), then the
/// conclusion tagged with the theorem it rests on; parts are indented below.
std::string format_text(const Certificate& cert, int indent = 0);
std::string format_text(const BoundReport& report);
std::string format_text(const KruskalReport& report);
std::string format_text(const SurveyReport& report);

} // namespace tensorcert
