#include <cstddef>
#include <string>
#include <vector>

#include "sklie/algebra.hpp"
#include "sklie/error.hpp"
#include "sklie/linalg.hpp"

namespace sklie {

namespace {

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim, Rational(0));
    v[i] = Rational(1);
    return v;
}

std::string basis_label(std::size_t i) { return "e" + std::to_string(i + 1); }

std::string entry_detail(const std::string& what, const Rational& value) {
    return what + " = " + value.str() + ", expected 0";
}

}  // namespace

VerificationItem check_antisymmetry(const LieAlgebra& g) {
    const std::size_t n = g.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational s = g.bracket.at(i, j, k) + g.bracket.at(j, i, k);
                if (!s.is_zero())
                    return VerificationItem::violation(
                        "antisymmetry", {i, j, k},
                        entry_detail("coefficient of " + basis_label(k) + " in [" +
                                         basis_label(i) + "," + basis_label(j) + "] + [" +
                                         basis_label(j) + "," + basis_label(i) + "]",
                                     s));
            }
    return VerificationItem::ok("antisymmetry");
}

VerificationItem check_jacobi(const LieAlgebra& g) {
    const std::size_t n = g.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec sum = g.bracket_of(g.bracket.pair(i, j), unit(n, k));
                sum = vec_add(sum, g.bracket_of(g.bracket.pair(j, k), unit(n, i)));
                sum = vec_add(sum, g.bracket_of(g.bracket.pair(k, i), unit(n, j)));
                for (std::size_t m = 0; m < n; ++m)
                    if (!sum[m].is_zero())
                        return VerificationItem::violation(
                            "jacobi", {i, j, k},
                            entry_detail("coefficient of " + basis_label(m) +
                                             " in the cyclic sum over (" + basis_label(i) + "," +
                                             basis_label(j) + "," + basis_label(k) + ")",
                                         sum[m]));
            }
    return VerificationItem::ok("jacobi");
}

VerificationItem check_scalar_2cocycle(const LieAlgebra& g, const BilinearForm& w) {
    const std::size_t n = g.dim;
    if (w.dim != n) fail(errc::dimension_mismatch, "form dimension does not match algebra");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Rational s = w.eval(g.bracket.pair(i, j), unit(n, k)) +
                             w.eval(g.bracket.pair(j, k), unit(n, i)) +
                             w.eval(g.bracket.pair(k, i), unit(n, j));
                if (!s.is_zero())
                    return VerificationItem::violation(
                        "omega_2cocycle", {i, j, k},
                        entry_detail("cyclic sum of omega([x,y],z) over (" + basis_label(i) +
                                         "," + basis_label(j) + "," + basis_label(k) + ")",
                                     s));
            }
    return VerificationItem::ok("omega_2cocycle");
}

VerificationItem check_nondegenerate(const BilinearForm& w) {
    if (det(w.matrix).is_zero())
        return VerificationItem::violation("omega_nondegenerate", {},
                                           "form matrix is singular (determinant 0)");
    return VerificationItem::ok("omega_nondegenerate");
}

VerificationItem check_left_symmetric(const ProductTable& p) {
    const std::size_t n = p.dim;
    auto associator = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vec xy_z = p.tensor.eval(p.tensor.pair(i, j), unit(n, k));
        Vec x_yz = p.tensor.eval(unit(n, i), p.tensor.pair(j, k));
        return vec_sub(xy_z, x_yz);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec d = vec_sub(associator(i, j, k), associator(j, i, k));
                for (std::size_t m = 0; m < n; ++m)
                    if (!d[m].is_zero())
                        return VerificationItem::violation(
                            "left_symmetric", {i, j, k},
                            entry_detail("coefficient of " + basis_label(m) + " in (" +
                                             basis_label(i) + "," + basis_label(j) + "," +
                                             basis_label(k) + ") - (" + basis_label(j) + "," +
                                             basis_label(i) + "," + basis_label(k) + ")",
                                         d[m]));
            }
    return VerificationItem::ok("left_symmetric");
}

VerificationItem check_compatibility(const LieAlgebra& g, const ProductTable& p) {
    const std::size_t n = g.dim;
    if (p.dim != n) fail(errc::dimension_mismatch, "product dimension does not match algebra");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational d =
                    g.bracket.at(i, j, k) - (p.tensor.at(i, j, k) - p.tensor.at(j, i, k));
                if (!d.is_zero())
                    return VerificationItem::violation(
                        "compatibility", {i, j, k},
                        entry_detail("coefficient of " + basis_label(k) + " in [" +
                                         basis_label(i) + "," + basis_label(j) + "] - (" +
                                         basis_label(i) + "*" + basis_label(j) + " - " +
                                         basis_label(j) + "*" + basis_label(i) + ")",
                                     d));
            }
    return VerificationItem::ok("compatibility");
}

VerificationItem check_symplectic_product(const BilinearForm& w, const ProductTable& p) {
    const std::size_t n = p.dim;
    if (w.dim != n) fail(errc::dimension_mismatch, "form dimension does not match product");
    for (std::size_t i = 0; i < n; ++i) {
        Matrix li = p.left_mult(i);
        Matrix expr = li.transpose() * w.matrix + w.matrix * li;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!expr.at(j, k).is_zero())
                    return VerificationItem::violation(
                        "symplectic_product", {i, j, k},
                        entry_detail("omega(" + basis_label(i) + "*" + basis_label(j) + "," +
                                         basis_label(k) + ") + omega(" + basis_label(j) + "," +
                                         basis_label(i) + "*" + basis_label(k) + ")",
                                     expr.at(j, k)));
    }
    return VerificationItem::ok("symplectic_product");
}

VerificationItem check_complex_structure(const LinearMap& j) {
    const std::size_t n = j.dim;
    Matrix expr = j.matrix * j.matrix + Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!expr.at(r, c).is_zero())
                return VerificationItem::violation(
                    "complex_structure", {r, c},
                    entry_detail("entry (" + std::to_string(r + 1) + "," +
                                     std::to_string(c + 1) + ") of j*j + id",
                                 expr.at(r, c)));
    return VerificationItem::ok("complex_structure");
}

VerificationItem check_integrability(const LieAlgebra& g, const LinearMap& j) {
    const std::size_t n = g.dim;
    if (j.dim != n) fail(errc::dimension_mismatch, "map dimension does not match algebra");
    if (!check_complex_structure(j).passed)
        fail(errc::prerequisite_failed,
             "integrability requires j*j = -id, which does not hold");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vec ja = j.matrix.col(a);
            Vec jb = j.matrix.col(b);
            Vec nij = vec_sub(g.bracket_of(ja, jb), g.bracket.pair(a, b));
            nij = vec_sub(nij, j.apply(g.bracket_of(ja, unit(n, b))));
            nij = vec_sub(nij, j.apply(g.bracket_of(unit(n, a), jb)));
            for (std::size_t m = 0; m < n; ++m)
                if (!nij[m].is_zero())
                    return VerificationItem::violation(
                        "integrability", {a, b},
                        entry_detail("coefficient of " + basis_label(m) +
                                         " in the Nijenhuis expression at (" + basis_label(a) +
                                         "," + basis_label(b) + ")",
                                     nij[m]));
        }
    return VerificationItem::ok("integrability");
}

VerificationItem check_one_cocycle(const ProductTable& p, const LinearMap& j,
                                   const LieAlgebra& g) {
    const std::size_t n = g.dim;
    if (p.dim != n || j.dim != n)
        fail(errc::dimension_mismatch, "product or map dimension does not match algebra");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vec lhs = j.apply(g.bracket.pair(a, b));
            Vec rhs = vec_sub(p.tensor.eval(unit(n, a), j.matrix.col(b)),
                              p.tensor.eval(unit(n, b), j.matrix.col(a)));
            Vec d = vec_sub(lhs, rhs);
            for (std::size_t m = 0; m < n; ++m)
                if (!d[m].is_zero())
                    return VerificationItem::violation(
                        "one_cocycle", {a, b},
                        entry_detail("coefficient of " + basis_label(m) + " in j([" +
                                         basis_label(a) + "," + basis_label(b) + "]) - (" +
                                         basis_label(a) + "*j(" + basis_label(b) + ") - " +
                                         basis_label(b) + "*j(" + basis_label(a) + "))",
                                     d[m]));
        }
    return VerificationItem::ok("one_cocycle");
}

VerificationItem check_omega_j_compatible(const BilinearForm& w, const LinearMap& j) {
    const std::size_t n = w.dim;
    if (j.dim != n) fail(errc::dimension_mismatch, "map dimension does not match form");
    Matrix expr = j.matrix.transpose() * w.matrix * j.matrix - w.matrix;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!expr.at(r, c).is_zero())
                return VerificationItem::violation(
                    "omega_j_compatible", {r, c},
                    entry_detail("omega(j(" + basis_label(r) + "),j(" + basis_label(c) +
                                     ")) - omega(" + basis_label(r) + "," + basis_label(c) + ")",
                                 expr.at(r, c)));
    return VerificationItem::ok("omega_j_compatible");
}

MetricResult metric_from(const BilinearForm& w, const LinearMap& j) {
    const std::size_t n = w.dim;
    if (j.dim != n) fail(errc::dimension_mismatch, "map dimension does not match form");
    Matrix k = w.matrix * j.matrix;

    VerificationItem symmetric = VerificationItem::ok("metric_symmetric");
    for (std::size_t r = 0; r < n && symmetric.passed; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            Rational d = k.at(r, c) - k.at(c, r);
            if (!d.is_zero()) {
                symmetric = VerificationItem::violation(
                    "metric_symmetric", {r, c},
                    entry_detail("k(" + basis_label(r) + "," + basis_label(c) + ") - k(" +
                                     basis_label(c) + "," + basis_label(r) + ")",
                                 d));
                break;
            }
        }

    VerificationItem nondegenerate =
        det(k).is_zero() ? VerificationItem::violation("metric_nondegenerate", {},
                                                       "metric matrix is singular (determinant 0)")
                         : VerificationItem::ok("metric_nondegenerate");

    auto kind = symmetric.passed ? BilinearForm::Kind::symmetric : BilinearForm::Kind::unconstrained;
    return MetricResult{BilinearForm(std::move(k), kind), std::move(symmetric),
                        std::move(nondegenerate)};
}

VerificationItem check_hessian(const BilinearForm& k, const ProductTable& p) {
    const std::size_t n = p.dim;
    if (k.dim != n) fail(errc::dimension_mismatch, "metric dimension does not match product");
    if (!k.matrix.is_symmetric())
        fail(errc::not_symmetric, "hessian condition requires a symmetric metric");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                Vec comm = vec_sub(p.tensor.pair(i, j), p.tensor.pair(j, i));
                Rational lhs = k.eval(comm, unit(n, m));
                Rational rhs = k.eval(unit(n, i), p.tensor.pair(j, m)) -
                               k.eval(unit(n, j), p.tensor.pair(i, m));
                Rational d = lhs - rhs;
                if (!d.is_zero())
                    return VerificationItem::violation(
                        "hessian", {i, j, m},
                        entry_detail("k(" + basis_label(i) + "*" + basis_label(j) + " - " +
                                         basis_label(j) + "*" + basis_label(i) + "," +
                                         basis_label(m) + ") - k(" + basis_label(i) + "," +
                                         basis_label(j) + "*" + basis_label(m) + ") + k(" +
                                         basis_label(j) + "," + basis_label(i) + "*" +
                                         basis_label(m) + ")",
                                     d));
            }
    return VerificationItem::ok("hessian");
}

std::vector<Matrix> nabla_j_commutators(const ProductTable& p, const LinearMap& j) {
    if (j.dim != p.dim) fail(errc::dimension_mismatch, "map dimension does not match product");
    std::vector<Matrix> result;
    result.reserve(p.dim);
    for (std::size_t i = 0; i < p.dim; ++i)
        result.push_back(commutator(p.left_mult(i), j.matrix));
    return result;
}

VerificationItem check_unimodular(const LieAlgebra& g) {
    for (std::size_t i = 0; i < g.dim; ++i) {
        Rational t = g.ad(i).trace();
        if (!t.is_zero())
            return VerificationItem::violation(
                "unimodular", {i}, entry_detail("tr(ad_" + basis_label(i) + ")", t));
    }
    return VerificationItem::ok("unimodular");
}

VerificationItem check_flat(const ProductTable& p, const LieAlgebra& g) {
    const std::size_t n = g.dim;
    if (p.dim != n) fail(errc::dimension_mismatch, "product dimension does not match algebra");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs = commutator(p.left_mult(i), p.left_mult(j));
            Vec b = g.bracket.pair(i, j);
            Matrix l_bracket(n, n);
            for (std::size_t m = 0; m < n; ++m) {
                if (b[m].is_zero()) continue;
                Matrix lm = p.left_mult(m);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        l_bracket.at(r, c) += b[m] * lm.at(r, c);
            }
            Matrix d = lhs - l_bracket;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (!d.at(r, c).is_zero())
                        return VerificationItem::violation(
                            "flat", {i, j},
                            entry_detail("entry (" + std::to_string(r + 1) + "," +
                                             std::to_string(c + 1) + ") of [L_" +
                                             basis_label(i) + ",L_" + basis_label(j) +
                                             "] - L_[" + basis_label(i) + "," + basis_label(j) +
                                             "]",
                                         d.at(r, c)));
        }
    return VerificationItem::ok("flat");
}

}  // namespace sklie
