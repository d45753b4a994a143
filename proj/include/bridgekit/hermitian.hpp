// hermitian.hpp — Hermitian predicates and spectral functions on the PD cone.

#pragma once

#include "bridgekit/core.hpp"

namespace bridgekit {

inline constexpr double kHermitianTol = 1e-12;
// Relative eigenvalue floors: eigenvalues below floor * lambda_max count as
// cone-boundary points and are rejected, never regularized. Spectral
// functions use the tighter floor, input validation the looser one.
inline constexpr double kEigenvalueFloor = 1e-13;
inline constexpr double kValidationFloor = 1e-12;

/// Largest entrywise deviation |A - A†|.
double hermiticity_error(const CMatrix& A);

CMatrix hermitian_part(const CMatrix& A);

void require_hermitian(const CMatrix& A, const char* what);

/// Eigenvalues of the Hermitian part of A, ascending.
Vector hermitian_eigenvalues(const CMatrix& A);

/// Throws ConeBoundaryError unless A is Hermitian with smallest eigenvalue
/// above the relative floor.
void require_positive_definite(const CMatrix& A, const char* what,
                               double relative_floor = kEigenvalueFloor);

/// Hermitian S ≻ 0 with S·S = A.
CMatrix hermitian_sqrt(const CMatrix& A);

CMatrix hermitian_inv_sqrt(const CMatrix& A);

CMatrix hermitian_inverse(const CMatrix& A);

/// Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-12.
void validate_density_matrix(const CMatrix& rho, const char* what = "density matrix");

}  // namespace bridgekit
