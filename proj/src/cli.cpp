#include "tensorcert/cli.hpp"

#include "tensorcert/errors.hpp"
#include "tensorcert/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tensorcert::cli {

namespace {

struct Options {
    std::string input;
    std::string partition;
    std::string format = "text";
    std::uint64_t seed = 0;
    int trials = 100;
    int box = kDefaultBox;
    int x = 0;
    std::string families;
    bool assert_quasi_general = false;
    std::vector<std::string> dims;
    std::string ranks = "1-4";
};

bool json_mode(const Options& o) { return o.format == "json"; }

Instance load(const Options& o)
{
    std::ifstream in(o.input);
    if (!in)
        throw ParseError("cannot read input file \"" + o.input + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

const Decomposition& decomposition(const Instance& inst)
{
    if (!inst.decomposition)
        throw PreconditionError("this command needs \"dims\" and \"points\"");
    return *inst.decomposition;
}

std::optional<FactorPartition> partition_of(const Options& o, int order)
{
    if (o.partition.empty())
        return std::nullopt;
    return FactorPartition::parse(o.partition, order);
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    std::string item;
    std::istringstream is{std::string(text)};
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("bad integer list \"" + std::string(text) + "\"");
        }
    }
    return out;
}

std::pair<Index, Index> parse_range(std::string_view text)
{
    const auto dash = text.find('-');
    if (dash == std::string_view::npos) {
        const auto v = parse_int_list(text);
        if (v.size() != 1)
            throw ParseError("bad rank range \"" + std::string(text) + "\"");
        return {v[0], v[0]};
    }
    const auto lo = parse_int_list(text.substr(0, dash));
    const auto hi = parse_int_list(text.substr(dash + 1));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
        throw ParseError("bad rank range \"" + std::string(text) + "\"");
    return {lo[0], hi[0]};
}

Json header(const std::string& command, const Decomposition& d)
{
    return Json{{"command", command},
                {"dims", d.points.shape().sizes()},
                {"r", d.points.size()}};
}

void print_header(std::ostream& out, const Decomposition& d)
{
    out << "shape " << d.points.shape().to_string() << ", r = " << d.points.size() << "\n";
}

int emit(std::ostream& out, const Options& o, Json document, const std::string& text, bool ok)
{
    if (json_mode(o))
        out << document.dump(2) << "\n";
    else
        out << text;
    return ok ? kCertified : kNotCertified;
}

int cmd_certify(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    const Decomposition& d = decomposition(inst);
    const AmbientTensor T = inst.tensor();
    const auto partition = partition_of(o, d.points.shape().order());

    const Certificate nr = check_non_redundant(T, d.points);
    const BoundReport bound = bound_cactus_rank(d.points, partition);
    const Certificate bound_cert = bound_certificate(d.points, bound);
    const Certificate exact = certify_exact_rank(T, d.points, partition);

    Json doc = header("certify", d);
    doc["certificates"] = Json::array({to_json(nr), to_json(bound_cert), to_json(exact)});
    doc["bound_report"] = to_json(bound);
    std::ostringstream text;
    print_header(text, d);
    text << format_text(nr) << format_text(bound) << format_text(bound_cert)
         << format_text(exact);
    const bool ok = nr.certified() && (exact.certified() || bound_cert.certified());
    return emit(out, o, std::move(doc), text.str(), ok);
}

int cmd_identifiability(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    const Decomposition& d = decomposition(inst);
    const Certificate cert = certify_ee4(inst.tensor(), d.points);
    Json doc = header("identifiability", d);
    doc["certificates"] = Json::array({to_json(cert)});
    std::ostringstream text;
    print_header(text, d);
    text << format_text(cert);
    return emit(out, o, std::move(doc), text.str(), cert.certified());
}

int cmd_kruskal(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    const Decomposition& d = decomposition(inst);
    const KruskalReport report = kruskal_certificate(d.points);
    Json doc = header("kruskal", d);
    doc["kruskal"] = to_json(report);
    std::ostringstream text;
    print_header(text, d);
    text << format_text(report);
    return emit(out, o, std::move(doc), text.str(), report.applies);
}

int cmd_compare(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    const Decomposition& d = decomposition(inst);
    const Comparison c = compare_criteria(inst.tensor(), d.points);
    Json doc = header("compare", d);
    doc["comparison"] = to_json(c);
    std::ostringstream text;
    print_header(text, d);
    text << format_text(c.exact_rank) << format_text(c.ee4) << format_text(c.bound)
         << format_text(c.kruskal);
    text << "flattening criteria: " << (c.flattening_applies ? "apply" : "do not apply")
         << "; Kruskal baseline: " << (c.kruskal_applies ? "applies" : "does not apply")
         << (c.flattening_only ? " (flattening only)" : "") << "\n";
    return emit(out, o, std::move(doc), text.str(), c.flattening_applies || c.kruskal_applies);
}

int cmd_augment(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    const Decomposition& d = decomposition(inst);
    const Augmentation aug = augment_decomposition(d, RngSeed{o.seed});
    Instance result;
    result.decomposition = aug.decomposition;
    Json doc = header("augment", d);
    doc["attempts"] = aug.attempts;
    doc["certificates"] = Json::array({to_json(aug.certificate)});
    doc["instance"] = to_json(result);
    std::ostringstream text;
    print_header(text, d);
    text << "augmented to " << aug.decomposition.points.size() << " points after "
         << aug.attempts << " attempt(s)\n"
         << format_text(aug.certificate) << to_json(result).dump() << "\n";
    return emit(out, o, std::move(doc), text.str(), aug.certificate.certified());
}

int cmd_obstruct(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    const Decomposition& d = decomposition(inst);
    const Certificate nr = check_non_redundant(inst.tensor(), d.points);
    const Certificate cert = obstruct_alt_decompositions(d.points, o.x);
    Json doc = header("obstruct", d);
    doc["certificates"] = Json::array({to_json(nr), to_json(cert)});
    std::ostringstream text;
    print_header(text, d);
    text << format_text(nr) << format_text(cert);
    return emit(out, o, std::move(doc), text.str(), nr.certified() && cert.certified());
}

int cmd_pin(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    const Decomposition& d = decomposition(inst);
    const int k = d.points.shape().order();
    std::vector<FactorSubset> families;
    std::istringstream is(o.families);
    std::string item;
    while (std::getline(is, item, ';'))
        families.push_back(FactorSubset::parse(item, k));
    const std::vector<bool> asserted(families.size(), o.assert_quasi_general);
    const Certificate cert = pin_projections(inst.tensor(), d.points, families, asserted);
    Json doc = header("pin", d);
    doc["certificates"] = Json::array({to_json(cert)});
    std::ostringstream text;
    print_header(text, d);
    text << format_text(cert);
    return emit(out, o, std::move(doc), text.str(), cert.certified());
}

int cmd_comon(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    if (!inst.symmetric)
        throw PreconditionError("comon needs a \"symmetric\" stanza");
    const SymmetricInstance& s = *inst.symmetric;
    const Certificate cert = comon_certify(s.tensor(), s.points, s.degree);
    const SymmetricBounds bounds = symmetric_bounds(s.n, s.degree);
    Json doc{{"command", "comon"}, {"n", s.n}, {"k", s.degree}, {"r", s.points.size()}};
    doc["certificates"] = Json::array({to_json(cert)});
    doc["bounds"] = to_json(bounds);
    std::ostringstream text;
    text << "forms of degree " << s.degree << " in " << s.n + 1 << " variables, r = "
         << s.points.size() << "\n"
         << format_text(cert) << "r0 = " << bounds.r0 << ", rg = " << bounds.rg
         << (bounds.exceptional ? " (exceptional, generic rank " +
                                      std::to_string(bounds.generic_rank) + ")"
                                : "")
         << "\n";
    return emit(out, o, std::move(doc), text.str(), cert.certified());
}

int cmd_bb_check(const Options& o, std::ostream& out)
{
    const Instance inst = load(o);
    const Decomposition& d = decomposition(inst);
    if (!inst.points_b)
        throw PreconditionError("bb-check needs a second point set \"points_b\"");
    const Certificate cert = verify_prop_bb(d.points, *inst.points_b);
    Json doc = header("bb-check", d);
    doc["certificates"] = Json::array({to_json(cert)});
    std::ostringstream text;
    print_header(text, d);
    text << format_text(cert);
    return emit(out, o, std::move(doc), text.str(), cert.certified());
}

int cmd_survey(const Options& o, std::ostream& out)
{
    std::vector<MultiShape> shapes;
    for (const auto& spec : o.dims)
        shapes.push_back(MultiShape::from_sizes(parse_int_list(spec)));
    if (shapes.empty())
        throw PreconditionError("survey needs at least one --dims");
    const auto [lo, hi] = parse_range(o.ranks);
    if (lo < 1)
        throw PreconditionError("ranks must be >= 1");
    const SurveyReport report = survey(shapes, lo, hi, o.trials, RngSeed{o.seed}, o.box);
    Json doc{{"command", "survey"}, {"seed", o.seed}, {"box", o.box}};
    doc["survey"] = to_json(report);
    emit(out, o, std::move(doc), format_text(report), true);
    return kCertified;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            o.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: parse: " << kSeedEnv << " is not an unsigned integer\n";
            return kParseError;
        }
    }

    CLI::App app{"Exact certificates of tensor rank, minimality and identifiability"};
    app.require_subcommand(1);

    const auto with_input = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "instance JSON file")->required();
        sub->add_option("--format", o.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        return sub;
    };

    auto* certify = with_input(app.add_subcommand(
        "certify", "non-redundancy, flattening lower bound and exact rank"));
    certify->add_option("--partition", o.partition, "E/F, e.g. 1,2/3; default: all");
    with_input(app.add_subcommand("identifiability", "minimality / uniqueness from 2r vs k + m"));
    with_input(app.add_subcommand("kruskal", "Kruskal-rank baseline"));
    with_input(app.add_subcommand("compare", "flattening criteria next to the Kruskal baseline"));
    auto* augment = with_input(app.add_subcommand(
        "augment", "split one summand into a larger non-redundant decomposition"));
    augment->add_option("--seed", o.seed, "random seed");
    auto* obstruct = with_input(app.add_subcommand(
        "obstruct", "rule out small alternative decompositions with different coordinates"));
    obstruct->add_option("--x", o.x, "size bound, 0 < x < k")->required();
    auto* pin = with_input(
        app.add_subcommand("pin", "pin the projections of alternative decompositions"));
    pin->add_option("--families", o.families, "F_1;...;F_k, e.g. 1,2;1,2;3")->required();
    pin->add_flag("--assert-quasi-general", o.assert_quasi_general,
                  "assert that each π_F(S) is quasi-general");
    with_input(app.add_subcommand("comon", "symmetric rank certificate (symmetric stanza)"));
    with_input(app.add_subcommand("bb-check", "check the span-intersection identity"));
    auto* survey_cmd = app.add_subcommand("survey", "criterion coverage on random instances");
    survey_cmd->add_option("--dims", o.dims, "factor sizes, e.g. 3,4,6 (repeatable)")
        ->required();
    survey_cmd->add_option("--ranks", o.ranks, "r or r_min-r_max");
    survey_cmd->add_option("--trials", o.trials, "trials per (shape, r)");
    survey_cmd->add_option("--seed", o.seed, "random seed");
    survey_cmd->add_option("--box", o.box, "coordinate bound")->check(CLI::PositiveNumber);
    survey_cmd->add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e, out, err);
        err << "error: usage: " << e.what() << "\n";
        return kPreconditionFailure;
    }

    try {
        const CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "certify")
            return cmd_certify(o, out);
        if (name == "identifiability")
            return cmd_identifiability(o, out);
        if (name == "kruskal")
            return cmd_kruskal(o, out);
        if (name == "compare")
            return cmd_compare(o, out);
        if (name == "augment")
            return cmd_augment(o, out);
        if (name == "obstruct")
            return cmd_obstruct(o, out);
        if (name == "pin")
            return cmd_pin(o, out);
        if (name == "comon")
            return cmd_comon(o, out);
        if (name == "bb-check")
            return cmd_bb_check(o, out);
        return cmd_survey(o, out);
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << "\n";
        return kParseError;
    } catch (const Json::exception& e) {
        err << "error: parse: " << e.what() << "\n";
        return kParseError;
    } catch (const PreconditionError& e) {
        err << "error: precondition: " << e.what() << "\n";
        return kPreconditionFailure;
    } catch (const std::exception& e) {
        err << "error: failure: " << e.what() << "\n";
        return kPreconditionFailure;
    }
}

} // namespace tensorcert::cli
