// cone.hpp — Hilbert projective metric on the positive orthant and on the
// cone of positive-definite Hermitian matrices, projective diameters and
// Birkhoff contraction ratios.

#pragma once

#include <functional>

#include "bridgekit/core.hpp"

namespace bridgekit {

/// Hilbert distance log(max_i(x_i/y_i) / min_i(x_i/y_i)) between rays of the
/// positive orthant. Both vectors must be strictly positive.
double hilbert_distance(const Vector& x, const Vector& y);

/// Hilbert distance on the PD cone: log(lambda_max/lambda_min) of
/// Y^{-1/2} X Y^{-1/2}. Inputs must be Hermitian positive definite.
double hilbert_distance(const CMatrix& X, const CMatrix& Y);

/// Projective diameter of the linear map x -> P x for an entrywise positive
/// matrix: max over index quadruples of log(P(i,j)P(k,l) / (P(i,l)P(k,j))).
/// Returns +inf when P has a zero entry (the caller may still iterate, with
/// no rate guarantee); negative entries throw.
double projective_diameter(const Matrix& P);

/// Birkhoff contraction ratio tanh(diameter/4); 1 for an infinite diameter.
double birkhoff_contraction_ratio(double diameter);

using ChannelFn = std::function<CMatrix(const CMatrix&)>;

/// Sampled estimate of the projective diameter of a positive map on the PD
/// cone: 2 * max_X d_H(channel(X), channel(I/dim)) over random densities,
/// mixing full-rank samples with rank-one projectors perturbed into the
/// interior. An estimate, not the exact supremum. Throws ConeBoundaryError
/// if some output fails to be positive definite (the map is then not
/// positivity improving).
double estimate_projective_diameter(const ChannelFn& channel, int dim,
                                    int samples, std::uint64_t seed);

namespace detail {

// Ray distance on the closed orthant: coordinates where both entries vanish
// are ignored, mismatched supports give +inf. Entries must be nonnegative.
double ray_distance(const Vector& x, const Vector& y);

// PD-cone distance without input validation (for solver iterates that the
// spectral functions already floored).
double psd_ray_distance(const CMatrix& X, const CMatrix& Y);

}  // namespace detail

}  // namespace bridgekit
