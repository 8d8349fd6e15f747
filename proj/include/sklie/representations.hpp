#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sklie/algebra.hpp"
#include "sklie/special_kahler.hpp"

namespace sklie {

/// (V, omega, J) with the compatible metric k(x,y) = omega(x, J(y)).
/// Construction validates the package: omega skew (via BilinearForm) and
/// nondegenerate, J² = −id, omega(Jx, Jy) = omega(x, y), k symmetric and
/// nondegenerate; violations throw Error(RepresentationInvalid) (dimension
/// clashes throw Error(DimensionMismatch)).
struct KahlerVectorSpace {
    std::size_t dim = 0;
    BilinearForm omega;
    LinearMap j;
    BilinearForm metric;

    KahlerVectorSpace(Matrix omega, Matrix j);
};

/// Data of an affine representation x ↦ (q(x), f_x) of a Lie algebra on a
/// Kähler vector space: q is the translation part (one column per basis
/// vector of the source), f the linear part. Only shapes are validated
/// (Error(DimensionMismatch)); the homomorphism and cocycle laws are checks.
struct AffineRepData {
    std::size_t source_dim = 0;
    KahlerVectorSpace target;
    Matrix q;
    std::vector<Matrix> f;

    AffineRepData(std::size_t source_dim, KahlerVectorSpace target, Matrix q,
                  std::vector<Matrix> f);
};

/// omega(A(x), y) + omega(x, A(y)) = 0 and A·J = J·A; single item
/// "kl_membership". Throws Error(DimensionMismatch) on shape clash.
VerificationItem check_kl_membership(const Matrix& a, const KahlerVectorSpace& v);

/// Items in order: f_homomorphism (f_{[x,y]} = [f_x, f_y]), f_kl_membership
/// (every f_x lies in kl(V, omega, J)), q_cocycle
/// (q([x,y]) = f_x q(y) − f_y q(x)).
VerificationReport check_rep_and_cocycle(const AffineRepData& r, const LieAlgebra& g);

/// The representation behind a flat-special structure: target (g, omega, j),
/// q = identity, f_x = L_x. Requires certification (Error(NotCertified)) and
/// [L_x, j] = 0 for all x (Error(NotFlatSpecial)).
AffineRepData etale_from_algebra(const SpecialKahlerAlgebra& a);

/// Matrix of x ↦ q(x) + f_x(v). Invertibility of the result is exactly
/// "étale at v"; the caller decides what to do with a singular value.
LinearMap psi_v(const AffineRepData& r, const Vec& v);

/// Pulls the structure back through ψ_v: omega'(x,y) = omega(ψ_v x, ψ_v y),
/// L'_x = ψ_v⁻¹ f_x ψ_v, j' = ψ_v⁻¹ J ψ_v, bracket the commutator of the
/// product. The output is certified, flat-special, and its metric has the
/// signature of the target's. Throws Error(RepresentationInvalid) when
/// check_rep_and_cocycle fails and Error(NotEtaleAtPoint) when ψ_v is
/// singular.
SpecialKahlerAlgebra algebra_from_etale(const AffineRepData& r, const Vec& v,
                                        std::string name = {});

}  // namespace sklie
