#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sklie/algebra.hpp"
#include "sklie/linalg.hpp"

namespace sklie {

/// The full structure (g, omega, j, ·) in one bundle. Construction only
/// validates shapes (matching even dimensions, skew omega); the defining
/// axioms are evaluated by verify(), whose report is cached, so a bundle is
/// immutable once shared.
class SpecialKahlerAlgebra {
public:
    LieAlgebra lie;
    BilinearForm omega;
    LinearMap j;
    ProductTable product;
    std::string name;

    SpecialKahlerAlgebra(LieAlgebra lie, Matrix omega, Matrix j, Tensor3 product,
                         std::string name = {});

    std::size_t dim() const { return lie.dim; }

    /// Runs the whole battery in a fixed order:
    ///   antisymmetry, jacobi, omega_skew, omega_nondegenerate, omega_2cocycle,
    ///   omega_j_compatible, complex_structure, integrability, left_symmetric,
    ///   compatibility, symplectic_product, one_cocycle, metric_symmetric,
    ///   metric_nondegenerate.
    /// integrability is reported as failed (not run) when j*j = -id fails.
    const VerificationReport& verify() const;
    bool certified() const { return verify().certified; }
    /// Throws Error(NotCertified) naming the first failing axiom.
    void require_certified() const;

    /// k = omega * j (cached alongside the report).
    const BilinearForm& metric() const;
    /// Signature (p, q) of the metric; throws Error(DegenerateMetric) when the
    /// metric is singular.
    Signature metric_signature() const;
    /// True iff every [L_x, j] vanishes, i.e. the product parallelizes j.
    /// Requires a certified bundle.
    bool is_flat_special() const;
    /// True iff the algebra is unimodular. Requires a certified bundle.
    bool is_geodesically_complete() const;

private:
    mutable std::optional<VerificationReport> report_;
    mutable std::optional<BilinearForm> metric_;
};

/// Subspace of a coordinate space, stored as an explicit independent basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vec> basis;

    Subspace() = default;
    /// Throws Error(DependentBasis) when the vectors are dependent.
    Subspace(std::size_t ambient_dim, std::vector<Vec> basis);

    std::size_t dim() const { return basis.size(); }
    /// Basis vectors as matrix columns.
    Matrix matrix() const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool same_as(const Subspace& other) const;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of arbitrary (possibly dependent) generators, reduced to a
    /// canonical independent basis.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators);
};

Subspace intersect(const Subspace& a, const Subspace& b);

/// {v : omega(v, s) = 0 for all s in the subspace}.
Subspace omega_perp(const SpecialKahlerAlgebra& a, const Subspace& s);

struct IdealPredicates {
    bool left_ideal = false;
    bool right_ideal = false;
    bool bilateral = false;
    bool totally_isotropic = false;
    bool complex = false;
    bool nondegenerate = false;
};

/// All predicates are with respect to the product (ideals), j (complex) and
/// omega (isotropy / nondegeneracy of the restriction).
IdealPredicates ideal_predicates(const SpecialKahlerAlgebra& a, const Subspace& s);

/// Transports the whole structure to the basis whose vectors are the columns
/// of p (expressed in the old coordinates). Throws Error(SingularMatrix) for
/// a non-invertible p. Certification is invariant under this map.
SpecialKahlerAlgebra change_basis(const SpecialKahlerAlgebra& a, const Matrix& p,
                                  std::string name = {});

/// Component-wise equality of the four structure tensors (same basis).
bool same_structure(const SpecialKahlerAlgebra& x, const SpecialKahlerAlgebra& y);

}  // namespace sklie
