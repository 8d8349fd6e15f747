#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sklie {

/// Library error with a stable machine-readable code.
///
/// Codes are used by the CLI to map failures onto exit codes and by tests to
/// pin down exactly which precondition fired. what() = "<code>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* parse_error = "ParseError";
inline constexpr const char* division_by_zero = "DivisionByZero";
inline constexpr const char* dimension_mismatch = "DimensionMismatch";
inline constexpr const char* singular_matrix = "SingularMatrix";
inline constexpr const char* not_skew = "NotSkew";
inline constexpr const char* not_symmetric = "NotSymmetric";
inline constexpr const char* prerequisite_failed = "PrerequisiteFailed";
inline constexpr const char* degenerate_metric = "DegenerateMetric";
inline constexpr const char* dependent_basis = "DependentBasis";
inline constexpr const char* not_certified = "NotCertified";
inline constexpr const char* not_flat = "NotFlat";
inline constexpr const char* twist_conditions_failed = "TwistConditionsFailed";
inline constexpr const char* not_left_ideal = "NotLeftIdeal";
inline constexpr const char* not_complex = "NotComplex";
inline constexpr const char* degenerate_restriction = "DegenerateRestriction";
inline constexpr const char* not_symplectic_derivation = "NotSymplecticDerivation";
inline constexpr const char* does_not_commute_with_j = "DoesNotCommuteWithJ";
inline constexpr const char* not_derivation = "NotDerivation";
inline constexpr const char* not_bilateral_ideal = "NotBilateralIdeal";
inline constexpr const char* not_isotropic = "NotIsotropic";
inline constexpr const char* complement_not_j_invariant = "ComplementNotJInvariant";
inline constexpr const char* not_normalized_line = "NotNormalizedLine";
inline constexpr const char* representation_invalid = "RepresentationInvalid";
inline constexpr const char* not_etale_at_point = "NotEtaleAtPoint";
inline constexpr const char* not_flat_special = "NotFlatSpecial";
inline constexpr const char* unknown_fixture = "UnknownFixture";
inline constexpr const char* io_error = "IoError";
inline constexpr const char* internal = "InternalError";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& detail) {
    throw Error(code, detail);
}

}  // namespace sklie
