#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sklie/special_kahler.hpp"

namespace sklie {

/// What the catalogue records about an entry, for tests and reports.
struct FixtureExpectation {
    bool certified = false;
    std::string failing_axiom;     // empty for positive entries
    std::string signature_paper;   // signature as printed in the source text
    bool flat_special = false;
    bool complete = false;         // geodesic completeness = unimodularity
};

/// Catalogue entry: either a full bundle (algebra) or a metric Lie algebra
/// (lie + metric) feeding the cotangent construction. basis_change, when
/// present, is the matrix carrying the associated construction output onto
/// the catalogue entry it reproduces.
struct Fixture {
    std::string name;
    std::optional<SpecialKahlerAlgebra> algebra;
    std::optional<LieAlgebra> lie;
    std::optional<BilinearForm> metric;
    FixtureExpectation expected;
    std::optional<Matrix> basis_change;
};

/// Registered base names, sorted; parametric families appear once.
std::vector<std::string> fixture_list();

/// Accepts plain names ("g1_dim4") and single-parameter forms ("model(3)",
/// "ga_dim6(7/3)"). Parametric names used bare get their default parameter.
/// Throws Error(UnknownFixture) for anything unregistered or malformed.
Fixture get_fixture(const std::string& name);

/// The admissible derivation family of the dim-4 key example, linear in a:
/// its derivation space is exactly {g3_derivation(a) : a}.
Matrix g3_derivation(const Rational& a);

/// Full-parameter form of the twisted catalogue family: the dim-4 key
/// example twisted with R^{2n}, the k-th standard generator acting through
/// t[k] * g3_derivation(a). t must have 2n entries.
SpecialKahlerAlgebra twisted_g3_r2n(std::size_t n, const std::vector<Rational>& t,
                                    const Rational& a);

}  // namespace sklie
