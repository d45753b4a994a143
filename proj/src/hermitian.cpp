#include "bridgekit/hermitian.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace bridgekit {

namespace {

// Eigendecomposition with the boundary floor applied; shared by the
// spectral functions below.
struct SpectralData {
  Vector values;
  CMatrix vectors;
};

SpectralData decompose_pd(const CMatrix& A, const char* what,
                          double relative_floor = kEigenvalueFloor) {
  require_hermitian(A, what);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(A));
  if (es.info() != Eigen::Success)
    throw ConeBoundaryError(std::string(what) + ": eigendecomposition failed");
  const Vector& w = es.eigenvalues();
  const double top = w(w.size() - 1);
  if (!(top > 0.0) || !(w(0) > relative_floor * top))
    throw ConeBoundaryError(std::string(what) +
                            ": matrix is not positive definite (smallest eigenvalue " +
                            std::to_string(w(0)) + ")");
  return {w, es.eigenvectors()};
}

}  // namespace

double hermiticity_error(const CMatrix& A) {
  return (A - A.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix hermitian_part(const CMatrix& A) { return 0.5 * (A + A.adjoint()); }

void require_hermitian(const CMatrix& A, const char* what) {
  if (A.rows() != A.cols())
    throw InvalidInput(std::string(what) + ": matrix is not square");
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if (hermiticity_error(A) > kHermitianTol * scale)
    throw InvalidInput(std::string(what) + ": matrix is not Hermitian within tolerance");
}

Vector hermitian_eigenvalues(const CMatrix& A) {
  require_hermitian(A, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(A), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

void require_positive_definite(const CMatrix& A, const char* what,
                               double relative_floor) {
  (void)decompose_pd(A, what, relative_floor);
}

CMatrix hermitian_sqrt(const CMatrix& A) {
  auto [w, V] = decompose_pd(A, "hermitian_sqrt");
  return hermitian_part(V * w.cwiseSqrt().asDiagonal() * V.adjoint());
}

CMatrix hermitian_inv_sqrt(const CMatrix& A) {
  auto [w, V] = decompose_pd(A, "hermitian_inv_sqrt");
  return hermitian_part(V * w.cwiseSqrt().cwiseInverse().asDiagonal() * V.adjoint());
}

CMatrix hermitian_inverse(const CMatrix& A) {
  auto [w, V] = decompose_pd(A, "hermitian_inverse");
  return hermitian_part(V * w.cwiseInverse().asDiagonal() * V.adjoint());
}

void validate_density_matrix(const CMatrix& rho, const char* what) {
  require_hermitian(rho, what);
  if (std::abs(rho.trace().real() - 1.0) > kHermitianTol ||
      std::abs(rho.trace().imag()) > kHermitianTol)
    throw InvalidInput(std::string(what) + ": trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(rho), Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kHermitianTol)
    throw InvalidInput(std::string(what) + ": negative eigenvalue " +
                       std::to_string(es.eigenvalues()(0)));
}

}  // namespace bridgekit
