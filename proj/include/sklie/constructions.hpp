#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sklie/algebra.hpp"
#include "sklie/special_kahler.hpp"

namespace sklie {

/// Actions linking two factors: theta[i] is the matrix by which the i-th
/// basis vector of the first factor acts on the second, rho[i] the matrix by
/// which the i-th basis vector of the second factor acts on the first.
struct RepresentationPair {
    std::vector<Matrix> theta;
    std::vector<Matrix> rho;

    static RepresentationPair zero(std::size_t dim1, std::size_t dim2);
};

struct DoubleExtensionInput {
    SpecialKahlerAlgebra base;
    Matrix derivation;
};

struct SplitResult {
    SpecialKahlerAlgebra factor1;  // the ideal, as a structure in its own basis
    SpecialKahlerAlgebra factor2;  // its omega-orthogonal, likewise
    RepresentationPair reps;
    Matrix adapted_basis;  // columns: factor1 basis then factor2 basis, in the original coordinates
};

struct ReductionResult {
    SpecialKahlerAlgebra reduced;
    Matrix derivation;
    Matrix adapted_basis;  // columns: e, complement basis, j(e), in the original coordinates
};

/// Unique product with 2k(x·y,z) = k([x,y],z) − k([y,z],x) + k([z,x],y).
/// It is automatically torsion-free (compatibility with the bracket) and
/// metric: k(x·y,z) + k(y,x·z) = 0. Throws Error(NotSymmetric) for a
/// non-symmetric k and Error(DegenerateMetric) for a singular one.
ProductTable levi_civita(const LieAlgebra& g, const BilinearForm& k);

/// The structure on g ⊕ g* built from a flat pseudo-Riemannian metric:
/// bracket [x+a, y+b] = [x,y] + Lt_x(b) − Lt_y(a) with Lt_x = −L_xᵀ acting on
/// dual coordinates, omega(x+a, y+b) = a(y) − b(x), product
/// (x+a)·(y+b) = x·y + Lt_x(b), and j(x+a) = k⁻¹(a) − k(x). Basis order is
/// (e_1..e_n, e_1*..e_n*). Throws Error(NotFlat) when the Levi-Civita
/// product of (g, k) has curvature.
SpecialKahlerAlgebra cotangent_hess(const LieAlgebra& g, const BilinearForm& k,
                                    std::string name = {});

/// Battery for the twisted product hypotheses, in order: theta_homomorphism,
/// rho_homomorphism, theta_symplectic, theta_commutes_j, rho_symplectic,
/// rho_commutes_j, twisted1, twisted2. Witnesses are basis-index pairs.
VerificationReport check_twist_conditions(const SpecialKahlerAlgebra& a1,
                                          const SpecialKahlerAlgebra& a2,
                                          const RepresentationPair& r);

/// Structure on g1 ⊕ g2 (first-factor coordinates first):
/// product (x1+x2)·(y1+y2) = x1·y1 + rho(x2)(y1) + theta(x1)(y2) + x2·y2,
/// bracket its commutator, omega and j block-diagonal. Throws
/// Error(TwistConditionsFailed) naming the first failing condition.
SpecialKahlerAlgebra twisted_product(const SpecialKahlerAlgebra& a1,
                                     const SpecialKahlerAlgebra& a2,
                                     const RepresentationPair& r, std::string name = {});

/// Inverse of twisted_product along a complex nondegenerate left ideal:
/// factor1 = the ideal, factor2 = its omega-orthogonal, actions
/// theta(x1)(x2) = x1·x2 and rho(x2)(x1) = x2·x1. Rebuilding with
/// twisted_product reproduces the input exactly in the adapted basis.
/// Throws Error(NotLeftIdeal) / Error(NotComplex) / Error(DegenerateRestriction).
SplitResult split_by_ideal(const SpecialKahlerAlgebra& a, const Subspace& ideal);

/// Basis of {D : Dᵀ·omega + omega·D = 0 and D·j = j·D}.
std::vector<Matrix> sp_commutant_space(const SpecialKahlerAlgebra& a);

/// Basis of the subspace of sp_commutant_space whose elements additionally
/// satisfy D(x·y) = D(x)·y + x·D(y) on all basis pairs. These are exactly
/// the derivations admissible for double_extension.
std::vector<Matrix> derivation_space(const SpecialKahlerAlgebra& a);

/// The dim+2 structure on Re ⊕ g ⊕ Rd (basis order e, g, d): e central,
/// [d,x] = D(x), omega extended by omega(e,d) = 1 with span{e,d} ⊥ g,
/// product extended by d⋄x = D(x) only, j extended by j(e) = d. Throws
/// Error(NotSymplecticDerivation) / Error(DoesNotCommuteWithJ) /
/// Error(NotDerivation) naming the violated hypothesis.
SpecialKahlerAlgebra double_extension(const DoubleExtensionInput& in, std::string name = {});
SpecialKahlerAlgebra double_extension(const SpecialKahlerAlgebra& base, const Matrix& derivation,
                                      std::string name = {});

/// Inverse of double_extension along the line I = span{e}: requires I and
/// its omega-orthogonal to be bilateral ideals and k(e,e) = 1, realizes the
/// quotient on the complement I^perp ∩ j(I)^perp, and extracts D from d⋄x.
/// Throws Error(NotBilateralIdeal), Error(ComplementNotJInvariant) when
/// k(e,e) = 0, and Error(NotNormalizedLine) when k(e,e) ∉ {0,1}.
ReductionResult reduce_by_line(const SpecialKahlerAlgebra& a, const Vec& line);

}  // namespace sklie
