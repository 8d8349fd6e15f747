#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sklie/constructions.hpp"
#include "sklie/error.hpp"
#include "sklie/fixtures.hpp"
#include "sklie/io.hpp"
#include "sklie/special_kahler.hpp"

namespace {

using namespace sklie;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "sklie 1.0.0";

/// Errors that mean "the request never made sense" exit 2; semantic failures
/// of well-formed requests exit 1.
bool is_usage_error(const std::string& code) {
    return code == errc::parse_error || code == errc::io_error || code == errc::unknown_fixture;
}

std::string read_file(const std::string& path) {
    auto slurp = [](const std::string& p) -> std::optional<std::string> {
        std::ifstream f(p, std::ios::binary);
        if (!f) return std::nullopt;
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    };
    if (auto text = slurp(path)) return *text;
    if (const char* dir = std::getenv("SK_FIXTURE_DIR")) {
        const std::string base = std::string(dir) + "/" + path;
        if (auto text = slurp(base)) return *text;
        if (auto text = slurp(base + ".json")) return *text;
    }
    fail(errc::io_error, "cannot read '" + path + "'");
}

struct LoadedAlgebra {
    SpecialKahlerAlgebra algebra;
    std::string input_name;
    std::string digest;
};

struct LoadedMetricLie {
    LieAlgebra lie;
    BilinearForm metric;
    std::string input_name;
    std::string digest;
};

constexpr const char* kFixturePrefix = "fixture:";

bool has_fixture_prefix(const std::string& s) {
    return s.rfind(kFixturePrefix, 0) == 0;
}

/// One algebra input: --fixture NAME, "fixture:NAME", or a file path
/// (resolved against SK_FIXTURE_DIR as a fallback).
LoadedAlgebra load_algebra(const std::string& path, const std::string& fixture) {
    if (!fixture.empty() && !path.empty())
        fail(errc::parse_error, "give either an input file or --fixture, not both");
    std::string fixture_name = fixture;
    if (has_fixture_prefix(path)) fixture_name = path.substr(std::string(kFixturePrefix).size());
    if (!fixture_name.empty()) {
        Fixture f = get_fixture(fixture_name);
        if (!f.algebra)
            fail(errc::parse_error,
                 "fixture '" + f.name + "' is a metric Lie algebra, not a full bundle");
        return {*f.algebra, f.name, digest_of(serialize(*f.algebra))};
    }
    if (path.empty()) fail(errc::parse_error, "no input given (file path or --fixture NAME)");
    const std::string text = read_file(path);
    SpecialKahlerAlgebra a = parse_input(text).to_algebra();
    return {a, a.name.empty() ? path : a.name, digest_of(serialize(a))};
}

LoadedMetricLie load_metric_lie(const std::string& path, const std::string& fixture) {
    if (!fixture.empty() && !path.empty())
        fail(errc::parse_error, "give either an input file or --fixture, not both");
    std::string fixture_name = fixture;
    if (has_fixture_prefix(path)) fixture_name = path.substr(std::string(kFixturePrefix).size());
    if (!fixture_name.empty()) {
        Fixture f = get_fixture(fixture_name);
        if (!f.lie || !f.metric)
            fail(errc::parse_error, "fixture '" + f.name + "' is not a metric Lie algebra");
        return {*f.lie, *f.metric, f.name,
                digest_of(serialize_metric_lie(*f.lie, *f.metric, f.name))};
    }
    if (path.empty()) fail(errc::parse_error, "no input given (file path or --fixture NAME)");
    ParsedInput in = parse_input(read_file(path));
    if (!in.metric)
        fail(errc::parse_error, "'" + path + "' has no 'metric': a metric Lie algebra is needed");
    BilinearForm k(*in.metric, BilinearForm::Kind::unconstrained);
    const std::string name = in.name.empty() ? path : in.name;
    return {in.lie, k, name, digest_of(serialize_metric_lie(in.lie, k, in.name))};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) fail(errc::io_error, "cannot open '" + out_path + "' for writing");
    f << text;
    if (!f) fail(errc::io_error, "failed writing '" + out_path + "'");
}

/// Non-report documents (solver listings, reductions): a header identifying
/// the input plus labeled embedded files.
std::string render_document(const std::string& input_name, const std::string& digest,
                            bool structured,
                            const std::vector<std::pair<std::string, std::string>>& fields,
                            const std::vector<std::pair<std::string, std::string>>& outputs) {
    if (structured) {
        ordered_json doc;
        doc["tool"] = kToolVersion;
        doc["input"] = {{"name", input_name}, {"digest", digest}};
        for (const auto& [key, value] : fields) doc[key] = value;
        if (!outputs.empty()) {
            ordered_json embedded = ordered_json::array();
            for (const auto& [label, text] : outputs)
                embedded.push_back({{"label", label}, {"file", ordered_json::parse(text)}});
            doc["outputs"] = std::move(embedded);
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << kToolVersion << "\n";
    os << "input: " << input_name << "\n";
    os << "digest: " << digest << "\n";
    for (const auto& [key, value] : fields) os << key << ": " << value << "\n";
    for (const auto& [label, text] : outputs) {
        os << "--- output: " << label << " ---\n";
        os << text;
    }
    return os.str();
}

Vec parse_vector(const std::string& text, std::size_t dim, const std::string& what) {
    Vec v;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            v.push_back(Rational::parse(token));
        } catch (const Error& e) {
            fail(errc::parse_error, what + ": " + e.what());
        }
    }
    if (v.size() != dim)
        fail(errc::parse_error, what + ": expected " + std::to_string(dim) +
                                    " comma-separated rationals, got " + std::to_string(v.size()));
    return v;
}

std::vector<Vec> parse_vectors(const std::string& text, std::size_t dim, const std::string& what) {
    std::vector<Vec> vs;
    std::stringstream ss(text);
    std::string chunk;
    while (std::getline(ss, chunk, ';')) vs.push_back(parse_vector(chunk, dim, what));
    if (vs.empty()) fail(errc::parse_error, what + ": expected at least one vector");
    return vs;
}

struct CommonOpts {
    std::string input_path;
    std::string fixture;
    std::string out_path;
    std::string format = "text";

    bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input) {
    if (with_input)
        cmd->add_option("input", opts.input_path,
                        "input file (or fixture:NAME); resolved against SK_FIXTURE_DIR");
    cmd->add_option("--fixture", opts.fixture, "load the input from the fixture registry");
    cmd->add_option("--out", opts.out_path, "write the result to a file instead of stdout");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
}

int cmd_verify(const CommonOpts& opts) {
    LoadedAlgebra in = load_algebra(opts.input_path, opts.fixture);
    emit(render_report(in.algebra, in.input_name, in.digest, opts.structured()), opts.out_path);
    return in.algebra.certified() ? 0 : 1;
}

int cmd_construct_cotangent(const CommonOpts& opts) {
    LoadedMetricLie in = load_metric_lie(opts.input_path, opts.fixture);
    SpecialKahlerAlgebra result =
        cotangent_hess(in.lie, in.metric, "cotangent(" + in.input_name + ")");
    emit(render_report(result, in.input_name, in.digest, opts.structured(),
                       {{"cotangent", serialize(result)}}),
         opts.out_path);
    return result.certified() ? 0 : 1;
}

int cmd_construct_twisted(const CommonOpts& opts, const std::string& first,
                          const std::string& second, const std::string& reps_path) {
    LoadedAlgebra a1 = load_algebra(first, "");
    LoadedAlgebra a2 = load_algebra(second, "");
    RepresentationPair reps = parse_reps_file(read_file(reps_path), a1.algebra.dim(),
                                              a2.algebra.dim());
    SpecialKahlerAlgebra result = twisted_product(
        a1.algebra, a2.algebra, reps, "twisted(" + a1.input_name + "," + a2.input_name + ")");
    const std::string digest = digest_of(serialize(result));
    emit(render_report(result, a1.input_name + " + " + a2.input_name, digest, opts.structured(),
                       {{"twisted", serialize(result)}}),
         opts.out_path);
    return result.certified() ? 0 : 1;
}

int cmd_construct_double_ext(const CommonOpts& opts, const std::string& derivation_path) {
    LoadedAlgebra in = load_algebra(opts.input_path, opts.fixture);
    const Matrix d = parse_matrix_file(read_file(derivation_path));
    SpecialKahlerAlgebra result =
        double_extension(in.algebra, d, "double_extension(" + in.input_name + ")");
    emit(render_report(result, in.input_name, in.digest, opts.structured(),
                       {{"double_extension", serialize(result)}}),
         opts.out_path);
    return result.certified() ? 0 : 1;
}

int cmd_solve_derivations(const CommonOpts& opts) {
    LoadedAlgebra in = load_algebra(opts.input_path, opts.fixture);
    const std::vector<Matrix> basis = derivation_space(in.algebra);
    std::vector<std::pair<std::string, std::string>> outputs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        outputs.push_back({"D" + std::to_string(i + 1),
                           serialize_matrix_file(basis[i], "D" + std::to_string(i + 1))});
    emit(render_document(in.input_name, in.digest, opts.structured(),
                         {{"dimension", std::to_string(basis.size())}}, outputs),
         opts.out_path);
    return 0;
}

int cmd_reduce(const CommonOpts& opts, const std::string& line_text,
               const std::string& ideal_text) {
    LoadedAlgebra in = load_algebra(opts.input_path, opts.fixture);
    if (line_text.empty() == ideal_text.empty())
        fail(errc::parse_error, "give exactly one of --line or --ideal");
    if (!line_text.empty()) {
        const Vec line = parse_vector(line_text, in.algebra.dim(), "--line");
        ReductionResult r = reduce_by_line(in.algebra, line);
        emit(render_report(r.reduced, in.input_name, in.digest, opts.structured(),
                           {{"reduced", serialize(r.reduced)},
                            {"derivation", serialize_matrix_file(r.derivation, "derivation")},
                            {"adapted_basis",
                             serialize_matrix_file(r.adapted_basis, "adapted_basis")}}),
             opts.out_path);
        return r.reduced.certified() ? 0 : 1;
    }
    const std::vector<Vec> gens = parse_vectors(ideal_text, in.algebra.dim(), "--ideal");
    SplitResult s = split_by_ideal(in.algebra, Subspace(in.algebra.dim(), gens));
    emit(render_report(s.factor1, in.input_name, in.digest, opts.structured(),
                       {{"factor1", serialize(s.factor1)},
                        {"factor2", serialize(s.factor2)},
                        {"reps", serialize_reps_file(s.reps, "reps")},
                        {"adapted_basis",
                         serialize_matrix_file(s.adapted_basis, "adapted_basis")}}),
         opts.out_path);
    return s.factor1.certified() && s.factor2.certified() ? 0 : 1;
}

int cmd_fixture(const CommonOpts& opts, bool list, const std::string& name) {
    if (list == !name.empty())
        fail(errc::parse_error, "give exactly one of --list or --name");
    if (list) {
        if (opts.structured()) {
            ordered_json doc = ordered_json::array();
            for (const std::string& n : fixture_list()) doc.push_back(n);
            emit(doc.dump(2) + "\n", opts.out_path);
        } else {
            std::ostringstream os;
            for (const std::string& n : fixture_list()) os << n << "\n";
            emit(os.str(), opts.out_path);
        }
        return 0;
    }
    Fixture f = get_fixture(name);
    if (f.algebra) {
        emit(serialize(*f.algebra), opts.out_path);
    } else {
        emit(serialize_metric_lie(*f.lie, *f.metric, f.name), opts.out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-tensor toolkit for special Kahler Lie algebras"};
    app.require_subcommand(1);

    std::function<int()> action;

    CommonOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run the full axiom battery on a bundle");
    add_common(verify, verify_opts, true);
    verify->callback([&] { action = [&] { return cmd_verify(verify_opts); }; });

    CLI::App* construct = app.add_subcommand("construct", "build new structures from inputs");
    construct->require_subcommand(1);

    CommonOpts cot_opts;
    CLI::App* cot = construct->add_subcommand(
        "cotangent", "cotangent structure of a flat metric Lie algebra");
    add_common(cot, cot_opts, true);
    cot->callback([&] { action = [&] { return cmd_construct_cotangent(cot_opts); }; });

    CommonOpts tw_opts;
    std::string tw_first, tw_second, tw_reps;
    CLI::App* tw = construct->add_subcommand("twisted", "twisted cartesian product of two bundles");
    tw->add_option("first", tw_first, "first factor (file or fixture:NAME)")->required();
    tw->add_option("second", tw_second, "second factor (file or fixture:NAME)")->required();
    tw->add_option("reps", tw_reps, "twist-action file with theta and rho lists")->required();
    tw->add_option("--out", tw_opts.out_path, "write the result to a file instead of stdout");
    tw->add_option("--format", tw_opts.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    tw->callback(
        [&] { action = [&] { return cmd_construct_twisted(tw_opts, tw_first, tw_second, tw_reps); }; });

    CommonOpts dext_opts;
    std::string dext_derivation;
    CLI::App* dext = construct->add_subcommand("double-ext",
                                               "double extension by an admissible derivation");
    add_common(dext, dext_opts, true);
    dext->add_option("--derivation", dext_derivation, "matrix file with the derivation")
        ->required();
    dext->callback(
        [&] { action = [&] { return cmd_construct_double_ext(dext_opts, dext_derivation); }; });

    CommonOpts solve_opts;
    CLI::App* solve = app.add_subcommand(
        "solve-derivations", "basis of the admissible derivations of a certified bundle");
    add_common(solve, solve_opts, true);
    solve->callback([&] { action = [&] { return cmd_solve_derivations(solve_opts); }; });

    CommonOpts reduce_opts;
    std::string reduce_line, reduce_ideal;
    CLI::App* reduce = app.add_subcommand(
        "reduce", "invert a double extension (--line) or a twisted product (--ideal)");
    add_common(reduce, reduce_opts, true);
    reduce->add_option("--line", reduce_line, "central line e as comma-separated rationals");
    reduce->add_option("--ideal", reduce_ideal,
                       "ideal basis: comma-separated vectors joined by ';'");
    reduce->callback(
        [&] { action = [&] { return cmd_reduce(reduce_opts, reduce_line, reduce_ideal); }; });

    CommonOpts fixture_opts;
    bool fixture_do_list = false;
    std::string fixture_name;
    CLI::App* fixture = app.add_subcommand("fixture", "inspect the built-in example catalogue");
    fixture->add_flag("--list", fixture_do_list, "print all registered names");
    fixture->add_option("--name", fixture_name, "emit one fixture in the input file format");
    fixture->add_option("--out", fixture_opts.out_path,
                        "write the result to a file instead of stdout");
    fixture->add_option("--format", fixture_opts.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    fixture->callback(
        [&] { action = [&] { return cmd_fixture(fixture_opts, fixture_do_list, fixture_name); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const sklie::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_usage_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
