#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sklie/linalg.hpp"
#include "sklie/matrix.hpp"
#include "sklie/tensor3.hpp"

namespace sklie {

/// Lie algebra as structure constants: bracket entry (i, j, k) is the e_k
/// coefficient of [e_i, e_j]. Antisymmetry and Jacobi are checkable
/// properties, not construction invariants, so malformed data can be
/// diagnosed instead of rejected.
struct LieAlgebra {
    std::size_t dim = 0;
    Tensor3 bracket;
    std::vector<std::string> basis_names;

    LieAlgebra() = default;
    LieAlgebra(std::size_t dim, Tensor3 bracket, std::vector<std::string> names = {});

    Vec bracket_of(const Vec& x, const Vec& y) const { return bracket.eval(x, y); }
    /// Matrix of ad_{e_i} = [e_i, ·].
    Matrix ad(std::size_t i) const { return bracket.left_slice(i); }
    const std::string& name_of(std::size_t i) const { return basis_names[i]; }
};

/// Bilinear form together with its intended symmetry kind. Skew/symmetric
/// kinds are validated at construction so downstream code can rely on them.
struct BilinearForm {
    enum class Kind { skew, symmetric, unconstrained };

    std::size_t dim = 0;
    Matrix matrix;
    Kind kind = Kind::unconstrained;

    BilinearForm() = default;
    BilinearForm(Matrix m, Kind kind);

    Rational eval(const Vec& x, const Vec& y) const;
};

/// Square matrix viewed as an endomorphism in the chosen basis.
struct LinearMap {
    std::size_t dim = 0;
    Matrix matrix;

    LinearMap() = default;
    explicit LinearMap(Matrix m);

    Vec apply(const Vec& x) const { return matrix.apply(x); }
};

/// Left-symmetric product candidate: entry (i, j, k) is the e_k coefficient
/// of e_i · e_j. Left-symmetry is a check, not an invariant.
struct ProductTable {
    std::size_t dim = 0;
    Tensor3 tensor;

    ProductTable() = default;
    explicit ProductTable(Tensor3 t);

    Vec prod(const Vec& x, const Vec& y) const { return tensor.eval(x, y); }
    /// Matrix of L_{e_i} = e_i · (·).
    Matrix left_mult(std::size_t i) const { return tensor.left_slice(i); }
};

/// Outcome of one axiom check. A failing item carries the first violating
/// basis indices (in check order) and a human-readable detail line.
struct VerificationItem {
    std::string axiom;
    bool passed = false;
    std::vector<std::size_t> witness;
    std::string detail;

    static VerificationItem ok(std::string axiom) {
        return VerificationItem{std::move(axiom), true, {}, {}};
    }
    static VerificationItem violation(std::string axiom, std::vector<std::size_t> witness,
                                      std::string detail) {
        return VerificationItem{std::move(axiom), false, std::move(witness), std::move(detail)};
    }
};

struct VerificationReport {
    std::vector<VerificationItem> items;
    bool certified = false;

    const VerificationItem* find(const std::string& axiom) const;
    /// Name of the first failing item, or empty string if none.
    std::string first_failure() const;
    static VerificationReport of(std::vector<VerificationItem> items);
};

// --- Axiom checks of the defining structure (each independently callable) ---

/// c^k_{ij} = −c^k_{ji} for all i, j.
VerificationItem check_antisymmetry(const LieAlgebra& g);
/// Σ_cyclic [[e_i, e_j], e_k] = 0 for all triples.
VerificationItem check_jacobi(const LieAlgebra& g);
/// ω([x,y],z) + ω([y,z],x) + ω([z,x],y) = 0 on basis triples.
VerificationItem check_scalar_2cocycle(const LieAlgebra& g, const BilinearForm& w);
/// det ≠ 0.
VerificationItem check_nondegenerate(const BilinearForm& w);
/// Associator symmetry (x,y,z) = (y,x,z) on basis triples.
VerificationItem check_left_symmetric(const ProductTable& p);
/// [x,y] = x·y − y·x as tensors.
VerificationItem check_compatibility(const LieAlgebra& g, const ProductTable& p);
/// ω(x·y, z) + ω(y, x·z) = 0, i.e. every L_x is ω-skew.
VerificationItem check_symplectic_product(const BilinearForm& w, const ProductTable& p);
/// j² = −id.
VerificationItem check_complex_structure(const LinearMap& j);
/// [j(x), j(y)] − [x,y] = j[j(x), y] + j[x, j(y)] on basis pairs.
/// Throws Error(PrerequisiteFailed) unless j² = −id.
VerificationItem check_integrability(const LieAlgebra& g, const LinearMap& j);
/// j([x,y]) = L_x(j(y)) − L_y(j(x)) on basis pairs.
VerificationItem check_one_cocycle(const ProductTable& p, const LinearMap& j,
                                   const LieAlgebra& g);
/// jᵀ ω j = ω, i.e. ω(j(x), j(y)) = ω(x, y).
VerificationItem check_omega_j_compatible(const BilinearForm& w, const LinearMap& j);

/// k(x,y) = ω(x, j(y)) with symmetry/nondegeneracy reported as items rather
/// than thrown (callers embed them in a larger report).
struct MetricResult {
    BilinearForm metric;  // kind symmetric when the matrix is, unconstrained otherwise
    VerificationItem symmetric;
    VerificationItem nondegenerate;
};
MetricResult metric_from(const BilinearForm& w, const LinearMap& j);

/// k(x·y − y·x, z) = k(x, y·z) − k(y, x·z) on basis triples.
/// Throws Error(NotSymmetric) for a non-symmetric k.
VerificationItem check_hessian(const BilinearForm& k, const ProductTable& p);
/// The commutators [L_{e_i}, j]; all zero ⇔ the product parallelizes j.
std::vector<Matrix> nabla_j_commutators(const ProductTable& p, const LinearMap& j);
/// tr(ad_{e_i}) = 0 for every i.
VerificationItem check_unimodular(const LieAlgebra& g);
/// [L_{e_i}, L_{e_j}] = L_{[e_i, e_j]} (zero curvature of the product).
VerificationItem check_flat(const ProductTable& p, const LieAlgebra& g);

/// Default basis labels e1..en.
std::vector<std::string> default_basis_names(std::size_t dim);

}  // namespace sklie
