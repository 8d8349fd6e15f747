#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "sklie/error.hpp"
#include "sklie/fixtures.hpp"
#include "sklie/special_kahler.hpp"

using namespace sklie;

namespace {

const SpecialKahlerAlgebra& g1() {
    static const SpecialKahlerAlgebra a = *get_fixture("g1_dim4").algebra;
    return a;
}

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n, Rational(0));
    v[i] = Rational(1);
    return v;
}

}  // namespace

TEST_CASE("battery order is pinned") {
    const std::vector<std::string> expected = {
        "antisymmetry",       "jacobi",           "omega_skew",       "omega_nondegenerate",
        "omega_2cocycle",     "omega_j_compatible", "complex_structure", "integrability",
        "left_symmetric",     "compatibility",    "symplectic_product", "one_cocycle",
        "metric_symmetric",   "metric_nondegenerate"};
    const VerificationReport& report = g1().verify();
    REQUIRE(report.items.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(report.items[i].axiom == expected[i]);
    CHECK(report.certified);
    CHECK(report.first_failure().empty());
}

TEST_CASE("integrability is skipped, not crashed, when j*j != -id") {
    // Take g1 and damage j so the complex-structure axiom fails.
    Matrix bad_j = g1().j.matrix;
    bad_j(0, 0) += Rational(1);
    SpecialKahlerAlgebra a(g1().lie, g1().omega.matrix, bad_j, g1().product.tensor, "damaged");
    const VerificationReport& report = a.verify();
    CHECK(!report.certified);
    const VerificationItem* cs = report.find("complex_structure");
    REQUIRE(cs != nullptr);
    CHECK(!cs->passed);
    const VerificationItem* integ = report.find("integrability");
    REQUIRE(integ != nullptr);
    CHECK(!integ->passed);
    CHECK(integ->detail.find("not evaluated") != std::string::npos);
}

TEST_CASE("construction validates shapes early") {
    // Odd dimension cannot carry a complex structure.
    Tensor3 b1 = Tensor3::cube(1);
    CHECK_THROWS_AS(
        SpecialKahlerAlgebra(LieAlgebra(1, b1), Matrix(1, 1), Matrix(1, 1), Tensor3::cube(1)),
        Error);
    // Non-skew omega is rejected at construction.
    Tensor3 b2 = Tensor3::cube(2);
    CHECK_THROWS_AS(SpecialKahlerAlgebra(LieAlgebra(2, b2), Matrix::identity(2),
                                         Matrix::identity(2), Tensor3::cube(2)),
                    Error);
}

TEST_CASE("require_certified names the first failing axiom") {
    const SpecialKahlerAlgebra neg = *get_fixture("neg_affR_1").algebra;
    try {
        neg.require_certified();
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_certified);
        CHECK(std::string(e.what()).find("one_cocycle") != std::string::npos);
    }
}

TEST_CASE("metric, signature, flatness, completeness of the catalogue heads") {
    CHECK(g1().metric_signature() == Signature{2, 2, 0});
    CHECK(g1().is_flat_special());
    CHECK(!g1().is_geodesically_complete());

    const SpecialKahlerAlgebra g3 = *get_fixture("g3_dim4").algebra;
    CHECK(g3.metric_signature() == Signature{2, 2, 0});
    CHECK(!g3.is_flat_special());
    CHECK(g3.is_geodesically_complete());
}

TEST_CASE("subspace construction and membership") {
    CHECK_THROWS_AS(Subspace(3, {unit(3, 0), unit(3, 0)}), Error);
    Subspace s(4, {unit(4, 0), unit(4, 1)});
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec_add(unit(4, 0), unit(4, 1))));
    CHECK(!s.contains(unit(4, 2)));
    CHECK(s.contains(Subspace(4, {unit(4, 0)})));
    CHECK(!Subspace(4, {unit(4, 0)}).contains(s));
    CHECK(Subspace::zero(4).dim() == 0);
    CHECK(Subspace::full(4).dim() == 4);
    CHECK(Subspace::full(4).contains(s));

    // span() collapses dependent generators to a canonical basis.
    Vec twice = vec_scale(Rational(2), unit(4, 0));
    Subspace sp = Subspace::span(4, {unit(4, 0), twice, unit(4, 1)});
    CHECK(sp.dim() == 2);
    CHECK(sp.same_as(s));
}

TEST_CASE("intersection of coordinate subspaces") {
    Subspace a(3, {unit(3, 0), unit(3, 1)});
    Subspace b(3, {unit(3, 1), unit(3, 2)});
    Subspace c = intersect(a, b);
    CHECK(c.dim() == 1);
    CHECK(c.contains(unit(3, 1)));
}

TEST_CASE("omega-perp is an involution and dimensions are complementary") {
    std::mt19937 rng(21);
    const SpecialKahlerAlgebra& a = g1();
    for (int t = 0; t < 20; ++t) {
        std::vector<Vec> gens;
        const std::size_t count = 1 + (t % 3);
        for (std::size_t i = 0; i < count; ++i) gens.push_back(testutil::random_vec(rng, 4));
        Subspace s = Subspace::span(4, gens);
        Subspace perp = omega_perp(a, s);
        CHECK(s.dim() + perp.dim() == 4);
        CHECK(omega_perp(a, perp).same_as(s));
    }
}

TEST_CASE("ideal predicates on the known split ideal of the twisted fixture") {
    const SpecialKahlerAlgebra tw = *get_fixture("twisted_g3_R2n(1)").algebra;
    // The R^2 block: last two coordinates of the 6-dim twisted fixture.
    Subspace ideal(6, {unit(6, 4), unit(6, 5)});
    const IdealPredicates p = ideal_predicates(tw, ideal);
    CHECK(p.left_ideal);
    CHECK(p.complex);
    CHECK(p.nondegenerate);
    CHECK(!p.totally_isotropic);

    // The center line of a double extension is totally isotropic.
    const SpecialKahlerAlgebra dext = *get_fixture("dext_model_J0(1)").algebra;
    Subspace line(4, {unit(4, 0)});
    const IdealPredicates q = ideal_predicates(dext, line);
    CHECK(q.bilateral);
    CHECK(q.left_ideal);
    CHECK(q.right_ideal);
    CHECK(q.totally_isotropic);
    CHECK(!q.complex);
}

TEST_CASE("change_basis preserves certification and derived data") {
    std::mt19937 rng(22);
    for (int t = 0; t < 10; ++t) {
        const Matrix p = testutil::random_invertible(rng, 4);
        const SpecialKahlerAlgebra moved = change_basis(g1(), p, "moved");
        CHECK(moved.certified());
        CHECK(moved.metric_signature() == g1().metric_signature());
        CHECK(moved.is_flat_special() == g1().is_flat_special());
        CHECK(moved.is_geodesically_complete() == g1().is_geodesically_complete());
        // Transport is functorial: undoing p restores the tensors exactly.
        const SpecialKahlerAlgebra back = change_basis(moved, inverse(p), "back");
        CHECK(same_structure(back, g1()));
    }
    CHECK_THROWS_AS(change_basis(g1(), Matrix(4, 4), "x"), Error);
}

TEST_CASE("change_basis acts correctly on the bracket (spot formula)") {
    // p swaps e1 <-> e2 in aff-like g1: new bracket entry must transport.
    Matrix p(4, 4);
    p(1, 0) = Rational(1);
    p(0, 1) = Rational(1);
    p(2, 2) = Rational(1);
    p(3, 3) = Rational(1);
    const SpecialKahlerAlgebra moved = change_basis(g1(), p, "swap12");
    // [e1', e2'] = [e2, e1] = -[e1, e2]; expressed in the new basis.
    const Vec lhs = moved.lie.bracket.pair(0, 1);
    const Vec old = g1().lie.bracket.pair(0, 1);
    // old result was in span(e2); new coordinates name it e1'.
    CHECK(lhs[0] == -old[1]);
}

TEST_CASE("same_structure is exact tensor equality") {
    CHECK(same_structure(g1(), g1()));
    const SpecialKahlerAlgebra g3 = *get_fixture("g3_dim4").algebra;
    CHECK(!same_structure(g1(), g3));
}

TEST_CASE("degenerate metric is rejected with its own error") {
    // omega and j chosen so k = omega*j is symmetric but singular is not
    // reachable for certified bundles; check the error surface directly on a
    // shape-valid, non-certified bundle.
    Matrix w(2, 2);
    w(0, 1) = Rational(1);
    w(1, 0) = Rational(-1);
    Matrix jm(2, 2);  // zero map: k = 0 is symmetric and singular
    Tensor3 zero = Tensor3::cube(2);
    SpecialKahlerAlgebra a(LieAlgebra(2, zero), w, jm, zero, "degenerate");
    CHECK_THROWS_AS(a.metric_signature(), Error);
    try {
        a.metric_signature();
    } catch (const Error& e) {
        CHECK(e.code() == errc::degenerate_metric);
    }
}
