#include "sklie/representations.hpp"

#include <utility>

#include "sklie/error.hpp"
#include "sklie/linalg.hpp"

namespace sklie {

namespace {

std::string basis_label(std::size_t i) { return "e" + std::to_string(i + 1); }

}  // namespace

KahlerVectorSpace::KahlerVectorSpace(Matrix omega_m, Matrix j_m)
    : dim(omega_m.rows()),
      omega(std::move(omega_m), BilinearForm::Kind::skew),
      j(std::move(j_m)),
      metric() {
    if (j.dim != dim) fail(errc::dimension_mismatch, "omega and J have different dimensions");
    if (det(omega.matrix).is_zero())
        fail(errc::representation_invalid, "omega is degenerate");
    Matrix jj = j.matrix * j.matrix;
    jj += Matrix::identity(dim);
    if (!jj.is_zero()) fail(errc::representation_invalid, "J*J = -id fails");
    if (j.matrix.transpose() * omega.matrix * j.matrix != omega.matrix)
        fail(errc::representation_invalid, "omega(Jx, Jy) = omega(x, y) fails");
    Matrix k = omega.matrix * j.matrix;
    if (!k.is_symmetric())
        fail(errc::representation_invalid, "the metric omega(x, Jy) is not symmetric");
    if (det(k).is_zero()) fail(errc::representation_invalid, "the metric omega(x, Jy) is degenerate");
    metric = BilinearForm(std::move(k), BilinearForm::Kind::symmetric);
}

AffineRepData::AffineRepData(std::size_t source_dim_, KahlerVectorSpace target_, Matrix q_,
                             std::vector<Matrix> f_)
    : source_dim(source_dim_), target(std::move(target_)), q(std::move(q_)), f(std::move(f_)) {
    if (q.rows() != target.dim || q.cols() != source_dim)
        fail(errc::dimension_mismatch, "q must map the source into the target");
    if (f.size() != source_dim)
        fail(errc::dimension_mismatch, "need one linear part per source basis vector");
    for (const Matrix& m : f)
        if (m.rows() != target.dim || m.cols() != target.dim)
            fail(errc::dimension_mismatch, "linear parts must be endomorphisms of the target");
}

VerificationItem check_kl_membership(const Matrix& a, const KahlerVectorSpace& v) {
    if (a.rows() != v.dim || a.cols() != v.dim)
        fail(errc::dimension_mismatch, "the endomorphism does not act on the space");
    const Matrix skew = a.transpose() * v.omega.matrix + v.omega.matrix * a;
    if (!skew.is_zero())
        return VerificationItem::violation("kl_membership", {},
                                           "omega(A(x), y) + omega(x, A(y)) does not vanish");
    if (!commutator(a, v.j.matrix).is_zero())
        return VerificationItem::violation("kl_membership", {}, "A·J = J·A fails");
    return VerificationItem::ok("kl_membership");
}

VerificationReport check_rep_and_cocycle(const AffineRepData& r, const LieAlgebra& g) {
    if (r.source_dim != g.dim)
        fail(errc::dimension_mismatch, "representation source and algebra dimensions differ");
    const std::size_t n = g.dim;

    VerificationItem hom = VerificationItem::ok("f_homomorphism");
    VerificationItem cocycle = VerificationItem::ok("q_cocycle");
    for (std::size_t i = 0; i < n && (hom.passed || cocycle.passed); ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec c = g.bracket.pair(i, j);
            if (hom.passed) {
                Matrix of_bracket(r.target.dim, r.target.dim);
                for (std::size_t m = 0; m < n; ++m) {
                    if (c[m].is_zero()) continue;
                    of_bracket += c[m] * r.f[m];
                }
                if (commutator(r.f[i], r.f[j]) != of_bracket)
                    hom = VerificationItem::violation(
                        "f_homomorphism", {i, j},
                        "f([" + basis_label(i) + "," + basis_label(j) +
                            "]) differs from [f_" + basis_label(i) + ", f_" + basis_label(j) + "]");
            }
            if (cocycle.passed) {
                const Vec lhs = r.q.apply(c);
                const Vec rhs = vec_sub(r.f[i].apply(r.q.col(j)), r.f[j].apply(r.q.col(i)));
                if (lhs != rhs)
                    cocycle = VerificationItem::violation(
                        "q_cocycle", {i, j},
                        "q([" + basis_label(i) + "," + basis_label(j) +
                            "]) differs from f_x q(y) − f_y q(x)");
            }
        }
    }

    VerificationItem kl = VerificationItem::ok("f_kl_membership");
    for (std::size_t i = 0; i < n; ++i) {
        VerificationItem item = check_kl_membership(r.f[i], r.target);
        if (!item.passed) {
            kl = VerificationItem::violation("f_kl_membership", {i},
                                             "f_" + basis_label(i) + ": " + item.detail);
            break;
        }
    }

    return VerificationReport::of({std::move(hom), std::move(kl), std::move(cocycle)});
}

AffineRepData etale_from_algebra(const SpecialKahlerAlgebra& a) {
    a.require_certified();
    if (!a.is_flat_special())
        fail(errc::not_flat_special,
             (a.name.empty() ? std::string("the structure") : a.name) +
                 " does not parallelize j: some [L_x, j] is nonzero");
    const std::size_t n = a.dim();
    KahlerVectorSpace target(a.omega.matrix, a.j.matrix);
    std::vector<Matrix> f;
    f.reserve(n);
    for (std::size_t i = 0; i < n; ++i) f.push_back(a.product.left_mult(i));
    return AffineRepData(n, std::move(target), Matrix::identity(n), std::move(f));
}

LinearMap psi_v(const AffineRepData& r, const Vec& v) {
    if (v.size() != r.target.dim)
        fail(errc::dimension_mismatch, "the point must lie in the target space");
    if (r.source_dim != r.target.dim)
        fail(errc::dimension_mismatch, "psi_v is an endomorphism only for equal dimensions");
    Matrix m(r.target.dim, r.source_dim);
    for (std::size_t i = 0; i < r.source_dim; ++i) {
        Vec col = vec_add(r.q.col(i), r.f[i].apply(v));
        m.set_col(i, col);
    }
    return LinearMap(std::move(m));
}

SpecialKahlerAlgebra algebra_from_etale(const AffineRepData& r, const Vec& v, std::string name) {
    const std::size_t n = r.source_dim;
    if (r.target.dim != n)
        fail(errc::dimension_mismatch,
             "the étale construction needs source and target of equal dimension");
    // kl-membership is a condition on the data alone; the homomorphism and
    // cocycle laws are re-checked below against the recovered bracket once
    // psi_v pins it down.
    for (std::size_t i = 0; i < n; ++i) {
        VerificationItem item = check_kl_membership(r.f[i], r.target);
        if (!item.passed)
            fail(errc::representation_invalid, "f_" + basis_label(i) + ": " + item.detail);
    }

    const LinearMap psi = psi_v(r, v);
    if (det(psi.matrix).is_zero())
        fail(errc::not_etale_at_point, "psi_v is singular at the supplied point");
    const Matrix psi_inv = inverse(psi.matrix);

    Matrix omega = psi.matrix.transpose() * r.target.omega.matrix * psi.matrix;
    Matrix j = psi_inv * r.target.j.matrix * psi.matrix;

    Tensor3 product = Tensor3::cube(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix li = psi_inv * r.f[i] * psi.matrix;
        for (std::size_t jj = 0; jj < n; ++jj)
            for (std::size_t k = 0; k < n; ++k) product.at(i, jj, k) = li.at(k, jj);
    }
    Tensor3 bracket = Tensor3::cube(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = i + 1; jj < n; ++jj) {
            const Vec w = vec_sub(product.pair(i, jj), product.pair(jj, i));
            bracket.set_pair(i, jj, w);
            bracket.set_pair(jj, i, vec_scale(Rational(-1), w));
        }

    // With psi_v invertible, the source bracket is forced: applying the
    // cocycle law to psi_v gives psi_v([x,y]) = f_x psi_v(y) − f_y psi_v(x),
    // i.e. the commutator of the conjugated product. The data is a genuine
    // affine representation exactly when the laws hold for that bracket.
    LieAlgebra recovered(n, bracket);
    VerificationReport rep = check_rep_and_cocycle(r, recovered);
    if (!rep.certified)
        fail(errc::representation_invalid,
             "the data is not an affine representation: '" + rep.first_failure() + "' fails");

    if (name.empty()) name = "etale";
    return SpecialKahlerAlgebra(LieAlgebra(n, std::move(bracket)), std::move(omega), std::move(j),
                                std::move(product), std::move(name));
}

}  // namespace sklie
