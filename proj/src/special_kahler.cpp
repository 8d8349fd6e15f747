#include "sklie/special_kahler.hpp"

#include <utility>

#include "sklie/error.hpp"

namespace sklie {

SpecialKahlerAlgebra::SpecialKahlerAlgebra(LieAlgebra lie_, Matrix omega_, Matrix j_,
                                           Tensor3 product_, std::string name_)
    : lie(std::move(lie_)),
      omega(std::move(omega_), BilinearForm::Kind::skew),
      j(std::move(j_)),
      product(std::move(product_)),
      name(std::move(name_)) {
    if (omega.dim != lie.dim || j.dim != lie.dim || product.dim != lie.dim)
        fail(errc::dimension_mismatch, "omega, j and product must match the algebra dimension");
    if (lie.dim % 2 != 0)
        fail(errc::dimension_mismatch,
             "a complex structure forces even dimension, got " + std::to_string(lie.dim));
}

const VerificationReport& SpecialKahlerAlgebra::verify() const {
    if (report_) return *report_;

    std::vector<VerificationItem> items;
    items.push_back(check_antisymmetry(lie));
    items.push_back(check_jacobi(lie));

    VerificationItem skew_item = VerificationItem::ok("omega_skew");
    for (std::size_t r = 0; r < dim() && skew_item.passed; ++r)
        for (std::size_t c = r; c < dim(); ++c) {
            Rational s = omega.matrix.at(r, c) + omega.matrix.at(c, r);
            if (!s.is_zero()) {
                skew_item = VerificationItem::violation(
                    "omega_skew", {r, c},
                    "omega(e" + std::to_string(r + 1) + ",e" + std::to_string(c + 1) +
                        ") + omega(e" + std::to_string(c + 1) + ",e" + std::to_string(r + 1) +
                        ") = " + s.str() + ", expected 0");
                break;
            }
        }
    items.push_back(std::move(skew_item));

    items.push_back(check_nondegenerate(omega));
    items.push_back(check_scalar_2cocycle(lie, omega));
    items.push_back(check_omega_j_compatible(omega, j));

    VerificationItem square = check_complex_structure(j);
    bool j_is_complex = square.passed;
    std::vector<std::size_t> square_witness = square.witness;
    items.push_back(std::move(square));
    if (j_is_complex) {
        items.push_back(check_integrability(lie, j));
    } else {
        items.push_back(VerificationItem::violation(
            "integrability", square_witness, "not evaluated: prerequisite j*j = -id fails"));
    }

    items.push_back(check_left_symmetric(product));
    items.push_back(check_compatibility(lie, product));
    items.push_back(check_symplectic_product(omega, product));
    items.push_back(check_one_cocycle(product, j, lie));

    MetricResult m = metric_from(omega, j);
    items.push_back(std::move(m.symmetric));
    items.push_back(std::move(m.nondegenerate));
    metric_ = std::move(m.metric);

    report_ = VerificationReport::of(std::move(items));
    return *report_;
}

void SpecialKahlerAlgebra::require_certified() const {
    const VerificationReport& report = verify();
    if (!report.certified)
        fail(errc::not_certified, (name.empty() ? std::string("algebra") : name) +
                                      " is not certified: axiom '" + report.first_failure() +
                                      "' fails");
}

const BilinearForm& SpecialKahlerAlgebra::metric() const {
    if (!metric_) verify();
    return *metric_;
}

Signature SpecialKahlerAlgebra::metric_signature() const {
    Signature sig = congruence_signature(metric().matrix);
    if (sig.zero != 0)
        fail(errc::degenerate_metric, "metric has a " + std::to_string(sig.zero) +
                                          "-dimensional radical, signature undefined");
    return sig;
}

bool SpecialKahlerAlgebra::is_flat_special() const {
    require_certified();
    for (const Matrix& c : nabla_j_commutators(product, j))
        if (!c.is_zero()) return false;
    return true;
}

bool SpecialKahlerAlgebra::is_geodesically_complete() const {
    require_certified();
    return check_unimodular(lie).passed;
}

Subspace::Subspace(std::size_t ambient, std::vector<Vec> basis_)
    : ambient_dim(ambient), basis(std::move(basis_)) {
    for (const Vec& v : basis)
        if (v.size() != ambient_dim)
            fail(errc::dimension_mismatch, "subspace basis vector has wrong ambient dimension");
    if (!basis.empty() && rank(Matrix::from_columns(ambient_dim, basis)) != basis.size())
        fail(errc::dependent_basis, "subspace basis vectors are linearly dependent");
}

Matrix Subspace::matrix() const { return Matrix::from_columns(ambient_dim, basis); }

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_dim)
        fail(errc::dimension_mismatch, "membership test with wrong ambient dimension");
    if (vec_is_zero(v)) return true;
    std::vector<Vec> extended = basis;
    extended.push_back(v);
    return rank(Matrix::from_columns(ambient_dim, extended)) == basis.size();
}

bool Subspace::contains(const Subspace& other) const {
    for (const Vec& v : other.basis)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::same_as(const Subspace& other) const {
    return dim() == other.dim() && contains(other);
}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, {}); }

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v(ambient, Rational(0));
        v[i] = Rational(1);
        basis.push_back(std::move(v));
    }
    return Subspace(ambient, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& generators) {
    if (generators.empty()) return zero(ambient);
    // Row-reduce the generators-as-rows; the nonzero rows are a canonical basis.
    Matrix rows(generators.size(), ambient);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != ambient)
            fail(errc::dimension_mismatch, "span generator has wrong ambient dimension");
        for (std::size_t c = 0; c < ambient; ++c) rows.at(i, c) = generators[i][c];
    }
    Matrix reduced = rref(rows);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        Vec row = reduced.row(i);
        if (!vec_is_zero(row)) basis.push_back(std::move(row));
    }
    return Subspace(ambient, std::move(basis));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        fail(errc::dimension_mismatch, "intersection of subspaces of different ambient spaces");
    const std::size_t n = a.ambient_dim;
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    // Solve S_a x = S_b y: null vectors of [S_a | -S_b] give the coefficients.
    Matrix stacked(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < a.dim(); ++c) stacked.at(i, c) = a.basis[c][i];
        for (std::size_t c = 0; c < b.dim(); ++c) stacked.at(i, a.dim() + c) = -b.basis[c][i];
    }
    std::vector<Vec> generators;
    for (const Vec& coeff : nullspace(stacked)) {
        Vec v(n, Rational(0));
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (!coeff[c].is_zero()) v = vec_add(v, vec_scale(coeff[c], a.basis[c]));
        generators.push_back(std::move(v));
    }
    return Subspace::span(n, generators);
}

Subspace omega_perp(const SpecialKahlerAlgebra& a, const Subspace& s) {
    if (s.ambient_dim != a.dim())
        fail(errc::dimension_mismatch, "subspace does not live in the algebra");
    const std::size_t n = a.dim();
    if (s.dim() == 0) return Subspace::full(n);
    Matrix conditions(s.dim(), n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        // Row r is x -> omega(s_r, x); by skewness this cuts out the same
        // space as omega(x, s_r) = 0.
        for (std::size_t c = 0; c < n; ++c) {
            Rational acc;
            for (std::size_t i = 0; i < n; ++i) {
                if (s.basis[r][i].is_zero()) continue;
                acc += s.basis[r][i] * a.omega.matrix.at(i, c);
            }
            conditions.at(r, c) = acc;
        }
    }
    return Subspace(n, nullspace(conditions));
}

IdealPredicates ideal_predicates(const SpecialKahlerAlgebra& a, const Subspace& s) {
    if (s.ambient_dim != a.dim())
        fail(errc::dimension_mismatch, "subspace does not live in the algebra");
    const std::size_t n = a.dim();
    IdealPredicates result;

    auto unit = [&](std::size_t i) {
        Vec v(n, Rational(0));
        v[i] = Rational(1);
        return v;
    };

    result.left_ideal = true;
    result.right_ideal = true;
    for (std::size_t i = 0; i < n && (result.left_ideal || result.right_ideal); ++i)
        for (const Vec& v : s.basis) {
            if (result.left_ideal && !s.contains(a.product.tensor.eval(unit(i), v)))
                result.left_ideal = false;
            if (result.right_ideal && !s.contains(a.product.tensor.eval(v, unit(i))))
                result.right_ideal = false;
        }
    result.bilateral = result.left_ideal && result.right_ideal;

    Matrix sm = s.matrix();
    Matrix restricted = sm.transpose() * a.omega.matrix * sm;
    result.totally_isotropic = restricted.is_zero();
    result.nondegenerate = !det(restricted).is_zero();

    result.complex = true;
    for (const Vec& v : s.basis)
        if (!s.contains(a.j.apply(v))) {
            result.complex = false;
            break;
        }

    return result;
}

SpecialKahlerAlgebra change_basis(const SpecialKahlerAlgebra& a, const Matrix& p,
                                  std::string name) {
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n)
        fail(errc::dimension_mismatch, "basis change matrix has wrong shape");
    Matrix p_inv = inverse(p);

    Matrix new_omega = p.transpose() * a.omega.matrix * p;
    Matrix new_j = p_inv * a.j.matrix * p;

    Tensor3 new_bracket(n, n, n);
    Tensor3 new_product(n, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec fi = p.col(i);
        for (std::size_t jj = 0; jj < n; ++jj) {
            Vec fj = p.col(jj);
            Vec br = p_inv.apply(a.lie.bracket_of(fi, fj));
            Vec pr = p_inv.apply(a.product.tensor.eval(fi, fj));
            for (std::size_t k = 0; k < n; ++k) {
                new_bracket.at(i, jj, k) = br[k];
                new_product.at(i, jj, k) = pr[k];
            }
        }
    }

    return SpecialKahlerAlgebra(LieAlgebra(n, std::move(new_bracket)), std::move(new_omega),
                                std::move(new_j), std::move(new_product),
                                name.empty() ? a.name : std::move(name));
}

bool same_structure(const SpecialKahlerAlgebra& x, const SpecialKahlerAlgebra& y) {
    return x.dim() == y.dim() && x.lie.bracket == y.lie.bracket &&
           x.omega.matrix == y.omega.matrix && x.j.matrix == y.j.matrix &&
           x.product.tensor == y.product.tensor;
}

}  // namespace sklie
