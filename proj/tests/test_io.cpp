#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "sklie/error.hpp"
#include "sklie/fixtures.hpp"
#include "sklie/io.hpp"
#include "sklie/special_kahler.hpp"

using namespace sklie;

TEST_CASE("serialize/parse is the identity on every full-bundle fixture") {
    for (const char* name : {"g1_dim4", "g2_dim6", "g3_dim4", "ga_dim6(7/3)", "model(2)",
                             "twisted_g3_R2n(1)", "dext_model_J0(1)", "neg_affR_2"}) {
        CAPTURE(name);
        const SpecialKahlerAlgebra a = *get_fixture(name).algebra;
        const std::string text = serialize(a);
        const ParsedInput in = parse_input(text);
        REQUIRE(in.is_full_bundle());
        const SpecialKahlerAlgebra back = in.to_algebra();
        CHECK(same_structure(back, a));
        CHECK(back.name == a.name);
        CHECK(back.lie.basis_names == a.lie.basis_names);
        // Byte stability: a second serialization is identical.
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("metric Lie files round-trip") {
    const Fixture f = get_fixture("h3_lorentz");
    const std::string text = serialize_metric_lie(*f.lie, *f.metric, f.name);
    const ParsedInput in = parse_input(text);
    CHECK(!in.is_full_bundle());
    REQUIRE(in.metric.has_value());
    CHECK(*in.metric == f.metric->matrix);
    CHECK(in.lie.bracket == f.lie->bracket);
    CHECK(in.name == "h3_lorentz");
    CHECK_THROWS_AS(in.to_algebra(), Error);
}

TEST_CASE("parser strictness") {
    const std::string good = serialize(*get_fixture("g1_dim4").algebra);

    auto corrupt = [&](const std::string& from, const std::string& to) {
        std::string text = good;
        const auto pos = text.find(from);
        REQUIRE(pos != std::string::npos);
        text.replace(pos, from.size(), to);
        return text;
    };

    // Floats are rejected even where JSON allows them.
    CHECK_THROWS_AS(parse_input(corrupt("\"-1\"", "-1.0")), Error);
    // Malformed rational strings are rejected.
    CHECK_THROWS_AS(parse_input(corrupt("\"-1\"", "\"1/0\"")), Error);
    CHECK_THROWS_AS(parse_input(corrupt("\"-1\"", "\"x\"")), Error);
    // Indices are 1-based and range-checked.
    CHECK_THROWS_AS(parse_input(corrupt("\"i\": 1", "\"i\": 0")), Error);
    CHECK_THROWS_AS(parse_input(corrupt("\"i\": 1", "\"i\": 9")), Error);
    // Brackets must have i < j.
    CHECK_THROWS_AS(parse_input(corrupt("\"i\": 1,\n      \"j\": 2", "\"i\": 2,\n      \"j\": 2")),
                    Error);
    // Top-level JSON must parse.
    CHECK_THROWS_AS(parse_input("{"), Error);
    CHECK_THROWS_AS(parse_input("[1,2]"), Error);

    for (const auto& bad : {corrupt("\"dim\": 4", "\"dim\": 0")}) {
        try {
            parse_input(bad);
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == errc::parse_error);
        }
    }
}

TEST_CASE("integers are tolerated where rational strings are expected") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(
        serialize(*get_fixture("model(1)").algebra));
    doc["omega"][0][1] = 1;  // bare int instead of "1"
    const ParsedInput in = parse_input(doc.dump());
    CHECK(in.omega->at(0, 1) == Rational(1));
}

TEST_CASE("a file cannot be both a full bundle and a metric Lie algebra") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(
        serialize(*get_fixture("model(1)").algebra));
    doc["metric"] = nlohmann::ordered_json::parse(R"([["1","0"],["0","1"]])");
    CHECK_THROWS_AS(parse_input(doc.dump()), Error);

    // Dropping one of omega/j/product breaks the full bundle.
    nlohmann::ordered_json partial = nlohmann::ordered_json::parse(
        serialize(*get_fixture("model(1)").algebra));
    partial.erase("j");
    CHECK_THROWS_AS(parse_input(partial.dump()), Error);
}

TEST_CASE("duplicate sparse entries are rejected") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(
        serialize(*get_fixture("g1_dim4").algebra));
    doc["brackets"].push_back(doc["brackets"][0]);
    CHECK_THROWS_AS(parse_input(doc.dump()), Error);
}

TEST_CASE("matrix files round-trip and validate") {
    const Matrix d = g3_derivation(Rational(7, 3));
    const std::string text = serialize_matrix_file(d, "D");
    CHECK(parse_matrix_file(text) == d);
    CHECK_THROWS_AS(parse_matrix_file("{}"), Error);
    CHECK_THROWS_AS(parse_matrix_file("{\"name\":\"m\",\"dim\":2,\"matrix\":[[\"1\"]]}"), Error);
}

TEST_CASE("reps files round-trip and validate shapes") {
    RepresentationPair r = RepresentationPair::zero(2, 4);
    r.rho[0] = Matrix::identity(2);
    r.theta[1] = Rational(2) * Matrix::identity(4);
    const std::string text = serialize_reps_file(r, "reps");
    const RepresentationPair back = parse_reps_file(text, 2, 4);
    CHECK(back.theta == r.theta);
    CHECK(back.rho == r.rho);
    // Wrong counts for the declared factor dimensions.
    CHECK_THROWS_AS(parse_reps_file(text, 4, 2), Error);
}

TEST_CASE("digest is deterministic, format-pinned, and input-sensitive") {
    const std::string a = serialize(*get_fixture("g1_dim4").algebra);
    const std::string b = serialize(*get_fixture("g3_dim4").algebra);
    CHECK(digest_of(a) == digest_of(a));
    CHECK(digest_of(a) != digest_of(b));
    CHECK(digest_of(a).rfind("fnv1a64:", 0) == 0);
    CHECK(digest_of(a).size() == 8 + 16);
    // Pinned reference value of the empty string under FNV-1a 64.
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(digest_of("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("reports are deterministic and carry the battery verbatim") {
    const SpecialKahlerAlgebra a = *get_fixture("g1_dim4").algebra;
    const std::string digest = digest_of(serialize(a));
    const std::string text1 = render_report(a, "g1_dim4", digest, false);
    const std::string text2 = render_report(a, "g1_dim4", digest, false);
    CHECK(text1 == text2);
    CHECK(text1.find("sklie 1.0.0") == 0);
    CHECK(text1.find("certified: yes") != std::string::npos);
    CHECK(text1.find("signature: (2,2)") != std::string::npos);
    CHECK(text1.find("flat_special: yes") != std::string::npos);
    CHECK(text1.find("unimodular: no") != std::string::npos);

    const std::string json_text = render_report(a, "g1_dim4", digest, true);
    const auto doc = nlohmann::ordered_json::parse(json_text);
    CHECK(doc["tool"] == "sklie 1.0.0");
    CHECK(doc["input"]["digest"] == digest);
    CHECK(doc["certified"] == true);
    CHECK(doc["items"].size() == 14);
    CHECK(doc["derived"]["signature"] == "(2,2)");
    CHECK(doc["derived"]["flat_special"] == true);
    CHECK(doc["derived"]["unimodular"] == false);
}

TEST_CASE("failing reports expose witness and detail, and drop derived facts") {
    const SpecialKahlerAlgebra neg = *get_fixture("neg_affR_1").algebra;
    const std::string digest = digest_of(serialize(neg));
    const auto doc =
        nlohmann::ordered_json::parse(render_report(neg, "neg_affR_1", digest, true));
    CHECK(doc["certified"] == false);
    CHECK(!doc.contains("derived"));
    bool found = false;
    for (const auto& item : doc["items"]) {
        if (item["axiom"] == "one_cocycle") {
            found = true;
            CHECK(item["passed"] == false);
            CHECK(item["witness"] == nlohmann::ordered_json::array({1, 2}));  // 1-based
            CHECK(item.contains("detail"));
        } else {
            CHECK(item["passed"] == true);
            CHECK(!item.contains("witness"));
        }
    }
    CHECK(found);
}

TEST_CASE("reports embed labeled output files") {
    const SpecialKahlerAlgebra a = *get_fixture("model(1)").algebra;
    const std::string digest = digest_of(serialize(a));
    const auto doc = nlohmann::ordered_json::parse(
        render_report(a, "base", digest, true, {{"result", serialize(a)}}));
    REQUIRE(doc.contains("outputs"));
    CHECK(doc["outputs"][0]["label"] == "result");
    CHECK(doc["outputs"][0]["file"]["dim"] == 2);

    const std::string text =
        render_report(a, "base", digest, false, {{"result", serialize(a)}});
    CHECK(text.find("--- output: result ---") != std::string::npos);
}
