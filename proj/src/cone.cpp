#include "bridgekit/cone.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

#include "bridgekit/hermitian.hpp"
#include "bridgekit/sampling.hpp"

namespace bridgekit {

namespace detail {

double ray_distance(const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    throw InvalidInput("hilbert_distance: vectors have different lengths");
  double max_ratio = 0.0;
  double min_ratio = kInf;
  bool any = false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double xi = x(i), yi = y(i);
    if (xi < 0.0 || yi < 0.0)
      throw InvalidInput("hilbert_distance: negative entry");
    if (xi == 0.0 && yi == 0.0) continue;   // shared face, unconstrained
    if (xi == 0.0 || yi == 0.0) return kInf;
    const double r = xi / yi;
    max_ratio = std::max(max_ratio, r);
    min_ratio = std::min(min_ratio, r);
    any = true;
  }
  if (!any) throw InvalidInput("hilbert_distance: zero vector");
  return std::log(max_ratio / min_ratio);
}

double psd_ray_distance(const CMatrix& X, const CMatrix& Y) {
  Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> ges(
      hermitian_part(X), hermitian_part(Y), Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  const Vector& w = ges.eigenvalues();
  if (!(w(0) > 0.0)) return kInf;
  return std::log(w(w.size() - 1) / w(0));
}

}  // namespace detail

double hilbert_distance(const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    throw InvalidInput("hilbert_distance: vectors have different lengths");
  if (x.size() == 0) throw InvalidInput("hilbert_distance: empty vectors");
  if (x.minCoeff() <= 0.0 || y.minCoeff() <= 0.0)
    throw InvalidInput("hilbert_distance: nonpositive entry");
  return detail::ray_distance(x, y);
}

double hilbert_distance(const CMatrix& X, const CMatrix& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw InvalidInput("hilbert_distance: dimension mismatch");
  require_positive_definite(X, "hilbert_distance: first argument", kValidationFloor);
  require_positive_definite(Y, "hilbert_distance: second argument", kValidationFloor);
  return detail::psd_ray_distance(X, Y);
}

double projective_diameter(const Matrix& P) {
  const Eigen::Index n = P.rows(), m = P.cols();
  if (n == 0 || m == 0) throw InvalidInput("projective_diameter: empty matrix");
  if (P.minCoeff() < 0.0)
    throw InvalidInput("projective_diameter: negative entry");
  if (P.minCoeff() == 0.0) return kInf;

  // sup over quadruples of log(P(i,j)P(k,l)/(P(i,l)P(k,j))) reduces, for a
  // fixed row pair (i,k), to max_j log(P(i,j)/P(k,j)) - min_l log(P(i,l)/P(k,l)).
  double diameter = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      double hi = -kInf, lo = kInf;
      for (Eigen::Index j = 0; j < m; ++j) {
        const double r = std::log(P(i, j) / P(k, j));
        hi = std::max(hi, r);
        lo = std::min(lo, r);
      }
      diameter = std::max(diameter, hi - lo);
    }
  }
  return diameter;
}

double birkhoff_contraction_ratio(double diameter) {
  if (std::isnan(diameter) || diameter < 0.0)
    throw InvalidInput("birkhoff_contraction_ratio: negative diameter");
  return std::tanh(0.25 * diameter);
}

double estimate_projective_diameter(const ChannelFn& channel, int dim,
                                    int samples, std::uint64_t seed) {
  if (dim < 1) throw InvalidInput("estimate_projective_diameter: dim must be >= 1");
  if (samples < 1) throw InvalidInput("estimate_projective_diameter: samples must be >= 1");

  std::mt19937_64 rng(seed);
  const CMatrix reference = channel(CMatrix::Identity(dim, dim) / double(dim));
  require_positive_definite(reference, "estimate_projective_diameter: channel output",
                            kValidationFloor);

  // Rank-one projectors are the extreme points of the state set; nudge them
  // into the interior so the channel argument stays PD.
  const double eps = 1e-9;
  const CMatrix bump = (eps / dim) * CMatrix::Identity(dim, dim);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    CMatrix X = (s % 2 == 0)
                    ? CMatrix((1.0 - eps) * random_rank_one_density(dim, rng) + bump)
                    : random_density_matrix(dim, rng);
    const CMatrix out = channel(X);
    require_positive_definite(out, "estimate_projective_diameter: channel output",
                              kValidationFloor);
    worst = std::max(worst, detail::psd_ray_distance(out, reference));
  }
  return 2.0 * worst;
}

}  // namespace bridgekit
