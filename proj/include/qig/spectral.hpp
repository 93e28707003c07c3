#pragma once

#include "qig/linalg.hpp"

namespace qig {

/// Functional calculus U·diag(φ(λ))·U†. Throws DomainError when φ is not
/// finite at some eigenvalue.
HermitianMatrix matrix_function(const DensityMatrix& rho, const ScalarFunction& phi);
HermitianMatrix matrix_function(const HermitianMatrix& h, const ScalarFunction& phi);
HermitianMatrix matrix_function(const SpectralDecomposition& s, const ScalarFunction& phi);

/// Raw kernel superoperator k(L_ρ, R_ρ)(X): in the eigenbasis of ρ the (i,j)
/// entry of X is multiplied by k(λ_i, λ_j). No Hermiticity assumption.
Matrix apply_kernel(const SpectralDecomposition& rho, const Kernel& k, const Matrix& x);

/// As apply_kernel, but the result must be Hermitian (k real and symmetric).
HermitianMatrix apply_kernel_superop(const DensityMatrix& rho, const Kernel& k,
                                     const HermitianMatrix& x);

/// Eigenvalues closer than this (relative to max(1, λ_max)) share a block.
inline constexpr double kDegeneracyTolerance = 1e-8;

TangentSplit tangent_split(const DensityMatrix& rho, const TangentVector& a);

/// Tr(A†B). Real part only; the imaginary part vanishes for Hermitian inputs.
double hs_inner(const HermitianMatrix& a, const HermitianMatrix& b);
Complex hs_product(const Matrix& a, const Matrix& b);

/// [a, b] = ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);

/// i[ρ, u]; Hermitian whenever ρ and u are.
HermitianMatrix i_commutator(const HermitianMatrix& rho, const HermitianMatrix& u);

}  // namespace qig
