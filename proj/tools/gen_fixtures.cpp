// Writes every registered fixture into a directory, one JSON file per
// fixture, in the CLI input format, plus the g3 derivation matrix used by
// the double-extension walkthrough.  Run from the repository root:
//
//   gen_fixtures fixtures
//
// The emitted files are committed; the test suite asserts they stay
// byte-identical to the registry serialization.
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "sklie/fixtures.hpp"
#include "sklie/io.hpp"

namespace {

using namespace sklie;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(1);
    }
    f << text;
}

std::string fixture_text(const std::string& registry_name) {
    Fixture f = get_fixture(registry_name);
    if (f.algebra) return serialize(*f.algebra);
    return serialize_metric_lie(*f.lie, *f.metric, f.name);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures OUTPUT_DIR\n";
        return 1;
    }
    const std::string dir = argv[1];

    const std::vector<std::pair<std::string, std::string>> entries = {
        {"g1_dim4", "g1_dim4"},
        {"g2_dim6", "g2_dim6"},
        {"g3_dim4", "g3_dim4"},
        {"ga_dim6(1)", "ga_dim6_1"},
        {"model(1)", "model_1"},
        {"model(2)", "model_2"},
        {"model(3)", "model_3"},
        {"twisted_g3_R2n(1)", "twisted_g3_R2n_1"},
        {"twisted_g3_R2n(2)", "twisted_g3_R2n_2"},
        {"dext_model_J0(1)", "dext_model_J0_1"},
        {"dext_model_J0(2)", "dext_model_J0_2"},
        {"neg_r2_connection", "neg_r2_connection"},
        {"neg_affR_1", "neg_affR_1"},
        {"neg_affR_2", "neg_affR_2"},
        {"affR_lorentz", "affR_lorentz"},
        {"h3_lorentz", "h3_lorentz"},
    };
    for (const auto& [registry_name, file_name] : entries)
        write_file(dir + "/" + file_name + ".json", fixture_text(registry_name));

    write_file(dir + "/g3_derivation_1.json",
               serialize_matrix_file(g3_derivation(Rational(1)), "g3_derivation_1"));

    std::cout << "wrote " << entries.size() + 1 << " files to " << dir << "\n";
    return 0;
}
