#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "sklie/fixtures.hpp"
#include "sklie/io.hpp"

using namespace sklie;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the CLI with stdout captured to a scratch file; stderr is folded in.
RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_test_output.tmp";
    const std::string cmd = testutil::cli_path() + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
#if defined(_WIN32)
    r.exit_code = status;
#else
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    std::ifstream f(out_path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    r.output = os.str();
    std::remove(out_path.c_str());
    return r;
}

std::string fixture_file(const std::string& stem) {
    return testutil::fixtures_dir() + "/" + stem + ".json";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << text;
}

}  // namespace

TEST_CASE("verify: exit 0 with a full report on a certified file") {
    const RunResult r = run_cli("verify " + fixture_file("g1_dim4"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("certified: yes") != std::string::npos);
    CHECK(r.output.find("signature: (2,2)") != std::string::npos);
    CHECK(r.output.find("[pass] one_cocycle") != std::string::npos);
}

TEST_CASE("verify: exit 1 but full report on a semantic failure") {
    const RunResult r = run_cli("verify " + fixture_file("neg_affR_1"));
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("certified: no") != std::string::npos);
    CHECK(r.output.find("[FAIL] one_cocycle") != std::string::npos);
}

TEST_CASE("verify: exit 2 on unparseable input") {
    write_file("cli_bad_input.tmp.json", "{\"name\": \"x\", \"dim\": 2, \"omega\": 3}");
    const RunResult r = run_cli("verify cli_bad_input.tmp.json");
    CHECK(r.exit_code == 2);
    std::remove("cli_bad_input.tmp.json");

    const RunResult missing = run_cli("verify no_such_file.json");
    CHECK(missing.exit_code == 2);

    const RunResult unknown = run_cli("verify --fixture no_such_fixture");
    CHECK(unknown.exit_code == 2);

    // A malformed rational like 1/0 in an otherwise fine file.
    const SpecialKahlerAlgebra model = *get_fixture("model(1)").algebra;
    auto doc = nlohmann::ordered_json::parse(serialize(model));
    doc["omega"][0][1] = "1/0";
    write_file("cli_bad_rational.tmp.json", doc.dump());
    const RunResult bad_rat = run_cli("verify cli_bad_rational.tmp.json");
    CHECK(bad_rat.exit_code == 2);
    std::remove("cli_bad_rational.tmp.json");
}

TEST_CASE("verify: reports are byte-identical across runs") {
    const std::string args = "verify --format structured " + fixture_file("g2_dim6");
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto doc = nlohmann::ordered_json::parse(a.output);
    CHECK(doc["subject"] == "g2_dim6");
    CHECK(doc["derived"]["signature"] == "(4,2)");
}

TEST_CASE("verify honours --fixture with parameters and --out") {
    const RunResult r = run_cli("verify --fixture \"ga_dim6(7/3)\" --out cli_report.tmp.json "
                                "--format structured");
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream f("cli_report.tmp.json");
    REQUIRE(f.good());
    const auto doc = nlohmann::ordered_json::parse(f);
    CHECK(doc["certified"] == true);
    std::remove("cli_report.tmp.json");
}

TEST_CASE("construct cotangent: metric file to certified bundle, exit 0") {
    const RunResult r =
        run_cli("construct cotangent " + fixture_file("h3_lorentz") + " --format structured");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.output);
    CHECK(doc["subject"] == "cotangent(h3_lorentz)");
    CHECK(doc["certified"] == true);
    CHECK(doc["outputs"][0]["label"] == "cotangent");
    CHECK(doc["outputs"][0]["file"]["dim"] == 6);

    // Full bundles are not valid cotangent input.
    const RunResult wrong = run_cli("construct cotangent " + fixture_file("g1_dim4"));
    CHECK(wrong.exit_code == 2);
}

TEST_CASE("construct double-ext consumes a derivation matrix file") {
    const RunResult r = run_cli("construct double-ext " + fixture_file("g3_dim4") +
                                " --derivation " + fixture_file("g3_derivation_1") +
                                " --format structured");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.output);
    CHECK(doc["certified"] == true);
    CHECK(doc["outputs"][0]["file"]["dim"] == 6);

    // The identity is not symplectic: semantic failure, exit 1.
    write_file("cli_identity.tmp.json",
               serialize_matrix_file(Matrix::identity(4), "identity"));
    const RunResult bad = run_cli("construct double-ext " + fixture_file("g3_dim4") +
                                  " --derivation cli_identity.tmp.json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("NotSymplecticDerivation") != std::string::npos);
    std::remove("cli_identity.tmp.json");
}

TEST_CASE("reduce --line then construct double-ext round-trips at the CLI level") {
    const RunResult red = run_cli("reduce --fixture \"ga_dim6(1)\" --line 1,0,0,0,0,0 "
                                  "--format structured --out cli_reduce.tmp.json");
    CHECK(red.exit_code == 0);
    std::ifstream f("cli_reduce.tmp.json");
    REQUIRE(f.good());
    const auto doc = nlohmann::ordered_json::parse(f);
    std::string reduced_text, derivation_text;
    for (const auto& out : doc["outputs"]) {
        if (out["label"] == "reduced") reduced_text = out["file"].dump();
        if (out["label"] == "derivation") derivation_text = out["file"].dump();
    }
    REQUIRE(!reduced_text.empty());
    REQUIRE(!derivation_text.empty());
    write_file("cli_reduced.tmp.json", reduced_text);
    write_file("cli_derivation.tmp.json", derivation_text);

    const RunResult ext = run_cli(
        "construct double-ext cli_reduced.tmp.json --derivation cli_derivation.tmp.json "
        "--format structured");
    CHECK(ext.exit_code == 0);
    const auto ext_doc = nlohmann::ordered_json::parse(ext.output);

    // The rebuilt bundle must match ga_dim6(1) tensor-for-tensor.
    const SpecialKahlerAlgebra expected = *get_fixture("ga_dim6(1)").algebra;
    const SpecialKahlerAlgebra rebuilt =
        parse_input(ext_doc["outputs"][0]["file"].dump()).to_algebra();
    CHECK(same_structure(rebuilt, expected));

    std::remove("cli_reduce.tmp.json");
    std::remove("cli_reduced.tmp.json");
    std::remove("cli_derivation.tmp.json");
}

TEST_CASE("reduce --ideal then construct twisted round-trips at the CLI level") {
    const RunResult red = run_cli(
        "reduce --fixture \"twisted_g3_R2n(1)\" --ideal \"0,0,0,0,1,0;0,0,0,0,0,1\" "
        "--format structured --out cli_split.tmp.json");
    CHECK(red.exit_code == 0);
    std::ifstream f("cli_split.tmp.json");
    REQUIRE(f.good());
    const auto doc = nlohmann::ordered_json::parse(f);
    std::string f1, f2, reps, adapted;
    for (const auto& out : doc["outputs"]) {
        if (out["label"] == "factor1") f1 = out["file"].dump();
        if (out["label"] == "factor2") f2 = out["file"].dump();
        if (out["label"] == "reps") reps = out["file"].dump();
        if (out["label"] == "adapted_basis") adapted = out["file"].dump();
    }
    REQUIRE(!f1.empty());
    REQUIRE(!f2.empty());
    REQUIRE(!reps.empty());
    REQUIRE(!adapted.empty());
    write_file("cli_f1.tmp.json", f1);
    write_file("cli_f2.tmp.json", f2);
    write_file("cli_reps.tmp.json", reps);

    const RunResult tw = run_cli(
        "construct twisted cli_f1.tmp.json cli_f2.tmp.json cli_reps.tmp.json --format structured");
    CHECK(tw.exit_code == 0);
    const auto tw_doc = nlohmann::ordered_json::parse(tw.output);
    const SpecialKahlerAlgebra rebuilt =
        parse_input(tw_doc["outputs"][0]["file"].dump()).to_algebra();

    const SpecialKahlerAlgebra original = *get_fixture("twisted_g3_R2n(1)").algebra;
    const Matrix p = parse_matrix_file(adapted);
    CHECK(same_structure(rebuilt, change_basis(original, p)));

    std::remove("cli_split.tmp.json");
    std::remove("cli_f1.tmp.json");
    std::remove("cli_f2.tmp.json");
    std::remove("cli_reps.tmp.json");
}

TEST_CASE("solve-derivations prints the dimension and basis") {
    const RunResult r =
        run_cli("solve-derivations " + fixture_file("g3_dim4") + " --format structured");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.output);
    CHECK(doc["dimension"] == "1");
    CHECK(doc["outputs"].size() == 1);
    CHECK(parse_matrix_file(doc["outputs"][0]["file"].dump()) == g3_derivation(Rational(1)));

    const RunResult model = run_cli("solve-derivations " + fixture_file("model_2"));
    CHECK(model.exit_code == 0);
    CHECK(model.output.find("dimension: 4") != std::string::npos);

    // Non-certified input: semantic failure.
    const RunResult neg = run_cli("solve-derivations " + fixture_file("neg_affR_1"));
    CHECK(neg.exit_code == 1);
    CHECK(neg.output.find("NotCertified") != std::string::npos);
}

TEST_CASE("fixture --list and --name agree with the registry and the shipped files") {
    const RunResult list = run_cli("fixture --list");
    CHECK(list.exit_code == 0);
    for (const std::string& name : fixture_list())
        CHECK(list.output.find(name) != std::string::npos);

    const RunResult one = run_cli("fixture --name \"model(2)\"");
    CHECK(one.exit_code == 0);
    CHECK(one.output == serialize(*get_fixture("model(2)").algebra));

    // The shipped files are exactly the registry serializations.
    std::ifstream shipped(fixture_file("model_2"), std::ios::binary);
    REQUIRE(shipped.good());
    std::ostringstream os;
    os << shipped.rdbuf();
    CHECK(os.str() == one.output);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);                       // no input at all
    CHECK(run_cli("reduce --fixture g1_dim4").exit_code == 2);     // neither --line nor --ideal
    CHECK(run_cli("fixture").exit_code == 2);                      // neither --list nor --name
    CHECK(run_cli("verify --format yaml x.json").exit_code == 2);  // bad enum value
    CHECK(run_cli("--help").exit_code == 0);
}
