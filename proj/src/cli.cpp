#include "zkhom/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "zkhom/error.hpp"
#include "zkhom/io.hpp"
#include "zkhom/pipeline.hpp"
#include "zkhom/verify.hpp"

namespace zkhom {

namespace {

struct Options {
    std::string input;
    std::vector<std::string> fields;
    std::string mode = "compressed";
    bool regularize = false;
    std::uint32_t generator = 1;
    std::string lift = "lex-min";
    std::string format = "table";
};

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

LiftPolicy lift_policy(const Options& o)
{
    return o.lift == "lex-max" ? LiftPolicy::lex_max : LiftPolicy::lex_min;
}

Field first_field(const Options& o)
{
    return o.fields.empty() ? Field::rationals() : Field::parse(o.fields.front());
}

// Creates the action and applies --regularize. Returns an exit code when the
// caller should stop.
std::optional<int> prepare_action(const ActionInput& in, const Options& o, std::optional<CyclicAction>& action,
                                  bool& regularized, std::ostream& err)
{
    action.emplace(in.action());
    const auto reg = is_regular(*action);
    if (reg.regular)
        return std::nullopt;
    if (!o.regularize) {
        err << "non-regular action; witness: " << reg.witness->to_string() << "\n"
            << "rerun with --regularize to subdivide twice\n";
        return exit_regularity_error;
    }
    action.emplace(regularize(*action));
    regularized = true;
    return std::nullopt;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const Input input = read_input(o.input);
    if (const auto* triple = std::get_if<IsotropyTriple>(&input)) {
        if (auto bad = triple_violation(*triple)) {
            out << "invalid triple: " << *bad << "\n";
            return exit_verification_failure;
        }
        out << "valid triple\n";
        return exit_ok;
    }
    const CyclicAction action = std::get<ActionInput>(input).action();
    out << "valid action of Z_" << action.k() << " on " << action.complex().count(0) << " vertices\n";
    const auto reg = is_regular(action);
    if (!reg.regular) {
        const auto& w = *reg.witness;
        out << "non-regular\n";
        out << "witness: simplex " << Simplex(w.vertices).to_string() << ", " << w.to_string() << "\n";
        return exit_regularity_error;
    }
    out << "regular\n";
    return exit_ok;
}

int cmd_homology(const Options& o, std::ostream& out, std::ostream& err)
{
    const Field field = first_field(o);
    const Input input = read_input(o.input);
    std::optional<CyclicAction> action;
    std::optional<IsotropyTriple> triple;
    bool regularized = false;

    if (const auto* t = std::get_if<IsotropyTriple>(&input)) {
        if (o.mode != "compressed") {
            err << "mode " << o.mode << " needs the complex; a triple input supports only --mode compressed\n";
            return exit_input_error;
        }
        if (auto bad = triple_violation(*t))
            throw ValidationError(*bad);
        triple = *t;
    } else {
        if (auto stop = prepare_action(std::get<ActionInput>(input), o, action, regularized, err))
            return *stop;
        if (o.mode != "direct")
            triple = build_triple(*action, lift_policy(o));
    }

    std::optional<CompressedResult> compressed;
    if (triple)
        compressed = compressed_betti(*triple, field, o.generator);
    std::optional<std::vector<std::size_t>> direct;
    if (action && o.mode != "compressed")
        direct = betti_direct(action->complex(), field);
    const bool both = compressed && direct;
    const bool match = both && compressed->betti == *direct;

    if (o.format == "json") {
        nlohmann::json doc = compressed ? to_json(*compressed) : nlohmann::json{{"field", field.name()}};
        doc["mode"] = o.mode;
        if (!compressed)
            doc["betti"] = *direct;
        if (direct)
            doc["direct_betti"] = *direct;
        if (both)
            doc["match"] = match;
        if (regularized)
            doc["regularized"] = true;
        out << doc.dump(2) << "\n";
    } else {
        out << "field: " << field.name() << "\n";
        if (regularized)
            out << "regularized: " << action->complex().count(0) << " vertices after two subdivisions\n";
        if (compressed) {
            out << std::left << std::setw(4) << "d" << std::setw(8) << "dimC" << std::setw(8) << "rank"
                << "snf\n";
            for (const auto& r : compressed->per_dim)
                out << std::setw(4) << r.d << std::setw(8) << r.dim_chains << std::setw(8) << r.rank
                    << r.snf.lifts_string() << "\n";
            out << "betti (compressed): " << join(compressed->betti) << "\n";
        }
        if (direct)
            out << "betti (direct): " << join(*direct) << "\n";
        if (both)
            out << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return both && !match ? exit_verification_failure : exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    std::vector<Field> fields;
    for (const auto& f : o.fields)
        fields.push_back(Field::parse(f));
    if (fields.empty())
        fields = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};

    const Input input = read_input(o.input);
    std::vector<CheckResult> results;
    if (const auto* t = std::get_if<IsotropyTriple>(&input)) {
        results = verify_triple(*t, fields);
    } else {
        std::optional<CyclicAction> action;
        bool regularized = false;
        if (auto stop = prepare_action(std::get<ActionInput>(input), o, action, regularized, err))
            return *stop;
        results = verify_action(*action, fields);
    }
    bool all = true;
    for (const auto& r : results) {
        out << (r.ok ? "PASS " : "FAIL ") << r.name;
        if (!r.ok)
            out << ": " << r.detail;
        out << "\n";
        all = all && r.ok;
    }
    out << (all ? "all checks passed" : "verification failed") << "\n";
    return all ? exit_ok : exit_verification_failure;
}

int cmd_triple(const Options& o, std::ostream& out, std::ostream& err)
{
    const Input input = read_input(o.input);
    if (std::holds_alternative<IsotropyTriple>(input)) {
        out << to_json(input).dump(2) << "\n";
        return exit_ok;
    }
    std::optional<CyclicAction> action;
    bool regularized = false;
    if (auto stop = prepare_action(std::get<ActionInput>(input), o, action, regularized, err))
        return *stop;
    out << to_json(build_triple(*action, lift_policy(o))).dump(2) << "\n";
    return exit_ok;
}

int cmd_regularize(const Options& o, std::ostream& out)
{
    const Input input = read_input(o.input);
    const auto* in = std::get_if<ActionInput>(&input);
    if (!in)
        throw ParseError("regularize needs a complex with an action, not a triple");
    out << to_json(regularize(in->action())).dump() << "\n";
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homology of simplicial complexes with a cyclic group action, from the quotient"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "JSON input file")->required();
        sub->add_option("--field", o.fields, "coefficient field: Q or Fp:<prime>");
        sub->add_flag("--regularize", o.regularize, "subdivide twice when the action is not regular");
    };
    auto* check = app.add_subcommand("check", "validate the action and test regularity");
    check->add_option("input", o.input, "JSON input file")->required();
    auto* homology = app.add_subcommand("homology", "Betti numbers, direct or from the quotient");
    add_common(homology);
    homology->add_option("--mode", o.mode, "direct | compressed | both")
        ->check(CLI::IsMember({"direct", "compressed", "both"}));
    homology->add_option("--generator", o.generator, "exponent c of the generator alpha^c");
    homology->add_option("--lift", o.lift, "lex-min | lex-max")->check(CLI::IsMember({"lex-min", "lex-max"}));
    homology->add_option("--format", o.format, "table | json")->check(CLI::IsMember({"table", "json"}));
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify);
    auto* triple = app.add_subcommand("triple", "print the isotropy transfer triple as JSON");
    add_common(triple);
    triple->add_option("--lift", o.lift, "lex-min | lex-max")->check(CLI::IsMember({"lex-min", "lex-max"}));
    auto* reg = app.add_subcommand("regularize", "print the twice-subdivided action as JSON");
    reg->add_option("input", o.input, "JSON input file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*check)
            return cmd_check(o, out);
        if (*homology)
            return cmd_homology(o, out, err);
        if (*verify)
            return cmd_verify(o, out, err);
        if (*triple)
            return cmd_triple(o, out, err);
        return cmd_regularize(o, out);
    } catch (const RegularityRequiredError& e) {
        err << "error: " << e.what() << "\n";
        return exit_regularity_error;
    } catch (const ValidationError& e) {
        err << "verification failure: " << e.what() << "\n";
        return exit_verification_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

} // namespace zkhom
