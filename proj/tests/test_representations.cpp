#include <doctest.h>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "sklie/error.hpp"
#include "sklie/fixtures.hpp"
#include "sklie/representations.hpp"
#include "sklie/special_kahler.hpp"

using namespace sklie;

namespace {

/// Standard symplectic plane with J rotating e1 -> e2.
KahlerVectorSpace standard_plane() {
    Matrix w(2, 2);
    w(0, 1) = Rational(1);
    w(1, 0) = Rational(-1);
    Matrix j(2, 2);
    j(1, 0) = Rational(1);
    j(0, 1) = Rational(-1);
    return KahlerVectorSpace(w, j);
}

const SpecialKahlerAlgebra& g1() {
    static const SpecialKahlerAlgebra a = *get_fixture("g1_dim4").algebra;
    return a;
}

}  // namespace

TEST_CASE("KahlerVectorSpace validates the whole package") {
    const KahlerVectorSpace v = standard_plane();
    CHECK(v.dim == 2);
    CHECK(v.metric.matrix == Matrix::identity(2));

    Matrix w(2, 2);
    w(0, 1) = Rational(1);
    w(1, 0) = Rational(-1);

    // Degenerate omega.
    try {
        KahlerVectorSpace(Matrix(2, 2), Matrix(2, 2));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::representation_invalid);
    }
    // J*J != -id.
    try {
        KahlerVectorSpace(w, Matrix::identity(2));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::representation_invalid);
        CHECK(std::string(e.what()).find("J*J") != std::string::npos);
    }
    // Dimension clash.
    CHECK_THROWS_AS(KahlerVectorSpace(w, Matrix::identity(4)), Error);
}

TEST_CASE("kl membership detects both defining conditions") {
    const KahlerVectorSpace v = standard_plane();
    CHECK(check_kl_membership(v.j.matrix, v).passed);  // J itself lies in u(1)
    CHECK(check_kl_membership(Matrix(2, 2), v).passed);
    const auto not_skew = check_kl_membership(Matrix::identity(2), v);
    CHECK(!not_skew.passed);
    CHECK(not_skew.detail.find("omega") != std::string::npos);

    // sp(2) element that does not commute with J: diag(1,-1).
    Matrix d(2, 2);
    d(0, 0) = Rational(1);
    d(1, 1) = Rational(-1);
    const auto not_commuting = check_kl_membership(d, v);
    CHECK(!not_commuting.passed);
    CHECK(not_commuting.detail.find("J") != std::string::npos);
}

TEST_CASE("etale_from_algebra packages q = id and f = left multiplication") {
    const AffineRepData r = etale_from_algebra(g1());
    CHECK(r.source_dim == 4);
    CHECK(r.q == Matrix::identity(4));
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.f[i] == g1().product.left_mult(i));

    const VerificationReport rep = check_rep_and_cocycle(r, g1().lie);
    CHECK(rep.certified);
    REQUIRE(rep.items.size() == 3);
    CHECK(rep.items[0].axiom == "f_homomorphism");
    CHECK(rep.items[1].axiom == "f_kl_membership");
    CHECK(rep.items[2].axiom == "q_cocycle");
}

TEST_CASE("etale_from_algebra refuses non-flat-special and non-certified input") {
    try {
        etale_from_algebra(*get_fixture("g3_dim4").algebra);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_flat_special);
    }
    try {
        etale_from_algebra(*get_fixture("neg_affR_1").algebra);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_certified);
    }
}

TEST_CASE("psi at the origin is q; elsewhere it shifts by the linear parts") {
    const AffineRepData r = etale_from_algebra(g1());
    CHECK(psi_v(r, Vec(4, Rational(0))).matrix == Matrix::identity(4));
    const Vec v = {Rational(1), Rational(0), Rational(0), Rational(0)};
    const Matrix psi = psi_v(r, v).matrix;
    for (std::size_t i = 0; i < 4; ++i) {
        Vec expected = vec_add(Matrix::identity(4).col(i), r.f[i].apply(v));
        CHECK(psi.col(i) == expected);
    }
}

TEST_CASE("algebra_from_etale at the origin reproduces the flat-special catalogue") {
    for (const char* name : {"g1_dim4", "g2_dim6", "model(1)", "model(2)", "model(3)"}) {
        CAPTURE(name);
        const SpecialKahlerAlgebra a = *get_fixture(name).algebra;
        const AffineRepData r = etale_from_algebra(a);
        const SpecialKahlerAlgebra back = algebra_from_etale(r, Vec(a.dim(), Rational(0)), "back");
        CHECK(same_structure(back, a));
        CHECK(back.certified());
    }
}

TEST_CASE("algebra_from_etale at other etale points stays certified with equal signature") {
    const AffineRepData r = etale_from_algebra(g1());
    int tried = 0;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y) {
            const Vec v = {Rational(x), Rational(y), Rational(0), Rational(0)};
            if (det(psi_v(r, v).matrix).is_zero()) continue;
            ++tried;
            const SpecialKahlerAlgebra b = algebra_from_etale(r, v);
            CHECK(b.certified());
            CHECK(b.metric_signature() == g1().metric_signature());
            CHECK(b.is_flat_special());
        }
    CHECK(tried >= 5);
}

TEST_CASE("algebra_from_etale error surface") {
    // Singular psi: q with a zero column and no linear parts.
    {
        Matrix q(2, 2);
        q(0, 0) = Rational(1);
        AffineRepData r(2, standard_plane(), q, {Matrix(2, 2), Matrix(2, 2)});
        try {
            algebra_from_etale(r, Vec(2, Rational(0)));
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == errc::not_etale_at_point);
        }
    }
    // f_1 = identity is not in kl: rejected before anything else.
    {
        AffineRepData r(2, standard_plane(), Matrix::identity(2),
                        {Matrix::identity(2), Matrix(2, 2)});
        try {
            algebra_from_etale(r, Vec(2, Rational(0)));
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == errc::representation_invalid);
        }
    }
    // f_1 = J, f_2 = 0 passes kl but breaks the homomorphism law for the
    // recovered bracket.
    {
        const KahlerVectorSpace v = standard_plane();
        const Matrix j = v.j.matrix;
        AffineRepData r(2, v, Matrix::identity(2), {j, Matrix(2, 2)});
        try {
            algebra_from_etale(r, Vec(2, Rational(0)));
            FAIL("expected throw");
        } catch (const Error& e) {
            CHECK(e.code() == errc::representation_invalid);
            CHECK(std::string(e.what()).find("f_homomorphism") != std::string::npos);
        }
    }
}
