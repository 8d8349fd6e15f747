#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sklie/algebra.hpp"
#include "sklie/constructions.hpp"
#include "sklie/special_kahler.hpp"

namespace sklie {

/// Result of parsing the JSON input format. Either a full bundle
/// (omega, j, product all present) or a metric Lie algebra (metric present),
/// never a mixture.
struct ParsedInput {
    std::string name;
    LieAlgebra lie;
    std::optional<Matrix> omega;
    std::optional<Matrix> j;
    std::optional<Tensor3> product;
    std::optional<Matrix> metric;

    bool is_full_bundle() const { return omega.has_value(); }
    /// Throws Error(ParseError) when the input is not a full bundle.
    SpecialKahlerAlgebra to_algebra() const;
};

/// Strict parse of the input format: rationals as strings (integers
/// tolerated, floats rejected), 1-based indices, sparse brackets with i<j
/// (antisymmetric closure implied), sparse products over arbitrary pairs.
/// Throws Error(ParseError) with a located detail message.
ParsedInput parse_input(const std::string& text);

/// Canonical serialization; parse_input(serialize(a)) reproduces a exactly
/// and the text is byte-stable for equal inputs.
std::string serialize(const SpecialKahlerAlgebra& a);
std::string serialize_metric_lie(const LieAlgebra& g, const BilinearForm& k,
                                 const std::string& name);

/// Square-matrix side files (derivation inputs, extracted derivations).
Matrix parse_matrix_file(const std::string& text);
std::string serialize_matrix_file(const Matrix& m, const std::string& name);

/// Twist-action side files: {"theta": [matrix...], "rho": [matrix...]} with
/// dim1 theta matrices acting on the second factor and dim2 rho matrices
/// acting on the first.
RepresentationPair parse_reps_file(const std::string& text, std::size_t dim1, std::size_t dim2);
std::string serialize_reps_file(const RepresentationPair& r, const std::string& name);

/// FNV-1a 64-bit over the canonical serialization; rendered "fnv1a64:<hex>".
std::uint64_t fnv1a64(const std::string& text);
std::string digest_of(const std::string& canonical_text);

/// Verification report: tool version, input name+digest, the subject bundle
/// (what the items describe — for plain verification the input itself, for
/// constructions the result), one line per battery item, derived facts
/// (signature, flat_special, unimodular — present only when certified), and
/// embedded output files (label + serialized document). structured=true
/// renders canonical JSON, otherwise a fixed-layout text block; both are
/// deterministic.
std::string render_report(const SpecialKahlerAlgebra& a, const std::string& input_name,
                          const std::string& input_digest, bool structured,
                          const std::vector<std::pair<std::string, std::string>>& outputs = {});

}  // namespace sklie
