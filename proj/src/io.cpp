#include "tensorcert/io.hpp"

#include "tensorcert/errors.hpp"

#include <iomanip>
#include <sstream>

namespace tensorcert {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

const Json& array(const Json& j, const std::string& what)
{
    if (!j.is_array())
        throw ParseError(what + " must be an array");
    return j;
}

Rational rational_from(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    throw ParseError("rationals must be strings like \"-3/4\"");
}

VectorXq vector_from(const Json& j, const std::string& what)
{
    array(j, what);
    VectorXq v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Index>(i)) = rational_from(j[i]);
    return v;
}

std::vector<Rational> rationals_from(const Json& j, const std::string& what)
{
    array(j, what);
    std::vector<Rational> out;
    for (const auto& item : j)
        out.push_back(rational_from(item));
    return out;
}

PointSet points_from(const Json& j, const MultiShape& shape, const std::string& what)
{
    array(j, what);
    std::vector<MultiPoint> pts;
    for (std::size_t p = 0; p < j.size(); ++p) {
        const std::string label = what + "[" + std::to_string(p + 1) + "]";
        array(j[p], label);
        std::vector<VectorXq> factors;
        for (const auto& f : j[p])
            factors.push_back(vector_from(f, label));
        pts.emplace_back(std::move(factors));
    }
    return PointSet(shape, std::move(pts));
}

int int_from(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

} // namespace

AmbientTensor Instance::tensor() const
{
    if (!decomposition)
        throw PreconditionError("instance has no \"dims\"/\"points\" decomposition");
    if (tensor_coords)
        return AmbientTensor(decomposition->points.shape(), *tensor_coords);
    return decomposition->tensor();
}

Instance parse_instance(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("instance must be a JSON object");

    Instance out;
    if (j.contains("dims") || j.contains("points")) {
        std::vector<int> sizes;
        for (const auto& d : array(field(j, "dims"), "dims"))
            sizes.push_back(int_from(d, "dims entry"));
        const MultiShape shape = MultiShape::from_sizes(sizes);
        PointSet pts = points_from(field(j, "points"), shape, "points");
        std::vector<Rational> weights = j.contains("weights")
                                            ? rationals_from(j["weights"], "weights")
                                            : std::vector<Rational>(pts.size(), Rational(1));
        out.decomposition = Decomposition{std::move(pts), std::move(weights)};
        // Validates weights against points (nonzero, one each, nonzero sum).
        const AmbientTensor assembled = out.decomposition->tensor();

        if (j.contains("tensor")) {
            VectorXq coords = vector_from(j["tensor"], "tensor");
            const AmbientTensor given(shape, coords);
            if (!(given == assembled))
                throw PreconditionError("tensor disagrees with points and weights");
            out.tensor_coords = std::move(coords);
        }
        if (j.contains("points_b"))
            out.points_b = points_from(j["points_b"], shape, "points_b");
    }

    if (j.contains("symmetric")) {
        const Json& s = j["symmetric"];
        SymmetricInstance sym;
        sym.n = int_from(field(s, "n"), "symmetric.n");
        sym.degree = int_from(field(s, "k"), "symmetric.k");
        std::vector<VectorXq> pts;
        for (const auto& p : array(field(s, "points"), "symmetric.points"))
            pts.push_back(vector_from(p, "symmetric point"));
        sym.points = SymPointSet(sym.n, std::move(pts));
        sym.weights = s.contains("weights")
                          ? rationals_from(s["weights"], "symmetric.weights")
                          : std::vector<Rational>(static_cast<std::size_t>(sym.points.size()),
                                                  Rational(1));
        (void)sym.tensor();
        out.symmetric = std::move(sym);
    }

    if (!out.decomposition && !out.symmetric)
        throw ParseError("instance needs \"dims\"/\"points\" or a \"symmetric\" stanza");
    return out;
}

Json to_json(const VectorXq& v)
{
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(to_string(v(i)));
    return out;
}

Json to_json(const MultiPoint& p)
{
    Json out = Json::array();
    for (const auto& f : p.factors())
        out.push_back(to_json(f));
    return out;
}

Json to_json(const Instance& instance)
{
    Json out = Json::object();
    if (instance.decomposition) {
        const auto& d = *instance.decomposition;
        out["dims"] = d.points.shape().sizes();
        out["points"] = Json::array();
        for (const auto& p : d.points)
            out["points"].push_back(to_json(p));
        out["weights"] = Json::array();
        for (const auto& w : d.weights)
            out["weights"].push_back(to_string(w));
        if (instance.tensor_coords)
            out["tensor"] = to_json(*instance.tensor_coords);
        if (instance.points_b) {
            out["points_b"] = Json::array();
            for (const auto& p : *instance.points_b)
                out["points_b"].push_back(to_json(p));
        }
    }
    if (instance.symmetric) {
        const auto& s = *instance.symmetric;
        Json sym = Json::object();
        sym["n"] = s.n;
        sym["k"] = s.degree;
        sym["points"] = Json::array();
        for (const auto& p : s.points.points())
            sym["points"].push_back(to_json(p));
        sym["weights"] = Json::array();
        for (const auto& w : s.weights)
            sym["weights"].push_back(to_string(w));
        out["symmetric"] = std::move(sym);
    }
    return out;
}

// Certificates ----------------------------------------------------------------

Json to_json(const Certificate& cert)
{
    Json out = Json::object();
    out["claim"] = to_string(cert.claim);
    out["certified"] = cert.certified();
    out["theorem"] = cert.theorem_ref;
    out["hypotheses"] = Json::array();
    for (const auto& h : cert.hypotheses)
        out["hypotheses"].push_back(
            Json{{"name", h.name}, {"status", to_string(h.status)}, {"witness", h.witness}});
    if (cert.conclusion) {
        Json values = Json::object();
        for (const auto& [key, value] : cert.conclusion->values)
            values[key] = value;
        out["conclusion"] = Json{{"statement", cert.conclusion->statement}, {"values", values}};
    } else {
        out["conclusion"] = nullptr;
    }
    out["notes"] = cert.notes;
    out["parts"] = Json::array();
    for (const auto& part : cert.parts)
        out["parts"].push_back(to_json(part));
    return out;
}

Certificate certificate_from_json(const Json& j)
{
    try {
        Certificate cert;
        cert.claim = parse_claim(j.at("claim").get<std::string>());
        cert.theorem_ref = j.at("theorem").get<std::string>();
        for (const auto& h : j.at("hypotheses"))
            cert.hypotheses.push_back({h.at("name").get<std::string>(),
                                       parse_status(h.at("status").get<std::string>()),
                                       h.at("witness").get<std::string>()});
        if (const Json& c = j.at("conclusion"); !c.is_null()) {
            Conclusion conclusion{c.at("statement").get<std::string>(), {}};
            for (const auto& [key, value] : c.at("values").items())
                conclusion.values.emplace_back(key, value.get<std::int64_t>());
            cert.conclusion = std::move(conclusion);
        }
        cert.notes = j.at("notes").get<std::vector<std::string>>();
        for (const auto& part : j.at("parts"))
            cert.parts.push_back(certificate_from_json(part));
        return cert;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

std::string format_text(const Certificate& cert, int indent)
{
    std::ostringstream os;
    os << pad(indent) << to_string(cert.claim) << " [" << cert.theorem_ref << "]"
       << (cert.certified() ? "" : " -- not certified") << "\n";
    for (const auto& h : cert.hypotheses) {
        os << pad(indent + 2) << h.name << ": ";
        if (h.status == Status::Asserted)
            os << "ASSERTED (not verified)";
        else
            os << to_string(h.status);
        if (!h.witness.empty())
            os << "  (" << h.witness << ")";
        os << "\n";
    }
    for (const auto& note : cert.notes)
        os << pad(indent + 2) << "note: " << note << "\n";
    for (const auto& part : cert.parts)
        os << format_text(part, indent + 4);
    if (cert.conclusion)
        os << pad(indent + 2) << "=> " << cert.conclusion->statement << " [" << cert.theorem_ref
           << "]\n";
    return os.str();
}

// Reports ---------------------------------------------------------------------

Json to_json(const BoundReport& report)
{
    Json out = Json::object();
    out["best_bound"] = report.best_bound;
    out["best_partition"] = report.best_partition ? Json(report.best_partition->to_string())
                                                  : Json(nullptr);
    out["per_partition"] = Json::array();
    for (const auto& p : report.per_partition) {
        Json entry{{"partition", p.partition.to_string()},
                   {"applicable", p.applicable},
                   {"h1_E", p.h1_E},
                   {"h0_F", p.h0_F},
                   {"bound", p.bound}};
        if (!p.applicable)
            entry["reason"] = p.reason;
        out["per_partition"].push_back(std::move(entry));
    }
    return out;
}

std::string format_text(const BoundReport& report)
{
    std::ostringstream os;
    os << "partition bounds (E/F):\n";
    for (const auto& p : report.per_partition) {
        os << "  " << std::left << std::setw(14) << p.partition.to_string();
        if (p.applicable)
            os << "rank >= " << p.bound << "\n";
        else
            os << "n/a: " << p.reason << "\n";
    }
    os << "best bound: " << report.best_bound;
    if (report.best_partition)
        os << " via " << report.best_partition->to_string();
    os << "\n";
    return os.str();
}

Json to_json(const KruskalReport& report)
{
    return Json{{"baseline", kKruskalBaseline},
                {"kruskal_ranks", report.per_factor_kruskal_rank},
                {"lhs", report.condition_lhs},
                {"rhs", report.condition_rhs},
                {"applies", report.applies}};
}

std::string format_text(const KruskalReport& report)
{
    std::ostringstream os;
    os << "Kruskal ranks:";
    for (Index k : report.per_factor_kruskal_rank)
        os << " " << k;
    os << "\n" << kKruskalBaseline << "\n";
    os << "  " << report.condition_lhs << (report.applies ? " >= " : " < ")
       << report.condition_rhs << " -> " << (report.applies ? "applies" : "not applicable")
       << "\n";
    return os.str();
}

Json to_json(const Comparison& c)
{
    return Json{{"non_redundant", to_json(c.non_redundant)},
                {"bound", to_json(c.bound)},
                {"exact_rank", to_json(c.exact_rank)},
                {"ee4", to_json(c.ee4)},
                {"kruskal", to_json(c.kruskal)},
                {"flattening_applies", c.flattening_applies},
                {"kruskal_applies", c.kruskal_applies},
                {"flattening_only", c.flattening_only},
                {"baseline", c.baseline}};
}

Json to_json(const SymmetricBounds& b)
{
    return Json{{"r0", b.r0},
                {"rg", b.rg},
                {"exceptional", b.exceptional},
                {"generic_rank", b.generic_rank}};
}

Json to_json(const SurveyReport& report)
{
    Json rows = Json::array();
    for (const auto& r : report.rows)
        rows.push_back(Json{{"dims", r.shape.sizes()},
                            {"r", r.r},
                            {"trials", r.trials},
                            {"exact_rank", r.exact_rank},
                            {"ee4", r.ee4},
                            {"kruskal", r.kruskal},
                            {"flattening_only", r.flattening_only},
                            {"sampling_failures", r.sampling_failures}});
    return Json{{"baseline", kKruskalBaseline}, {"rows", rows}};
}

std::string format_text(const SurveyReport& report)
{
    std::ostringstream os;
    os << std::left << std::setw(12) << "shape" << std::right << std::setw(4) << "r"
       << std::setw(8) << "trials" << std::setw(8) << "exact" << std::setw(8) << "ee4"
       << std::setw(9) << "kruskal" << std::setw(11) << "flat-only" << std::setw(10)
       << "no-sample" << "\n";
    for (const auto& r : report.rows)
        os << std::left << std::setw(12) << r.shape.to_string() << std::right << std::setw(4)
           << r.r << std::setw(8) << r.trials << std::setw(8) << r.exact_rank << std::setw(8)
           << r.ee4 << std::setw(9) << r.kruskal << std::setw(11) << r.flattening_only
           << std::setw(10) << r.sampling_failures << "\n";
    return os.str();
}

} // namespace tensorcert
