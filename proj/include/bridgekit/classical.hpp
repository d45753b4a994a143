// classical.hpp — Schrödinger bridges for discrete Markov priors: the
// contractive fixed-point solver for the potentials, the transformed
// transition kernels, multi-step assembly and relative entropy.

#pragma once

#include <utility>

#include "bridgekit/core.hpp"

namespace bridgekit {

/// Entries >= 0 and |sum - 1| <= 1e-12.
void validate_probability_vector(const Vector& p, const char* what = "probability vector");

/// Square, entries >= 0, row sums within 1e-12 of 1.
void validate_stochastic_matrix(const Matrix& P, const char* what = "stochastic matrix");

/// The four positive vectors solving the Schrödinger system for a one-step
/// kernel: phi0 = K phiT, phihatT = Kᵀ phihat0, phi0 ⊙ phihat0 = p0,
/// phiT ⊙ phihatT = pT.
struct SchrodingerPotentials {
  Vector phi0, phiT, phihat0, phihatT;
};

struct MarkovPrior {
  Vector initial;                // the prior chain's own starting law
  std::vector<Matrix> kernels;   // one square kernel per step

  int dimension() const { return static_cast<int>(initial.size()); }
  int steps() const { return static_cast<int>(kernels.size()); }
};

/// Backward harmonics phi(t) and forward coharmonics phihat(t), t = 0..T.
struct Harmonics {
  std::vector<Vector> phi;
  std::vector<Vector> phihat;
};

struct BridgeSolution {
  SchrodingerPotentials potentials;  // endpoint potentials of the composed kernel
  Matrix joint;                      // optimal endpoint coupling
  std::vector<Matrix> step_kernels;  // transformed kernels, one per step
  std::vector<Vector> marginals;     // bridge marginals, t = 0..T
  Harmonics harmonics;
  SolveReport report;
};

/// Sum of Q log(Q/P) with 0·log 0 = 0; +inf when Q puts mass outside the
/// support of P. Both arguments must be entrywise nonnegative with total
/// mass 1 within 1e-10.
double relative_entropy(const Matrix& Q, const Matrix& P);

/// Solve the one-step Schrödinger system for a strictly positive square
/// kernel and endpoint marginals by the contractive iteration
///   phihatT <- Kᵀ phihat0;  phiT <- pT ⊘ phihatT;
///   phi0   <- K phiT;       phihat0 <- p0 ⊘ phi0,
/// started from the all-ones vector, stopping when the Hilbert distance
/// between successive phihat0 iterates drops below tol. Marginals may have
/// zero entries (the affected states carry no bridge mass); the kernel must
/// be strictly positive unless options.override_positivity_check is set.
/// Exit scaling makes <phihat0, phi0> = 1. Non-convergence is reported via
/// SolveReport::converged, with the residual trace retained.
std::pair<SchrodingerPotentials, SolveReport>
solve_one_step(const Matrix& kernel, const Vector& p0, const Vector& pT,
               const SolveOptions& options = {});

/// Optimal coupling q(i,j) = phihat0(i) * kernel(i,j) * phiT(j).
Matrix one_step_joint(const SchrodingerPotentials& potentials, const Matrix& kernel);

/// Transformed kernel diag(phi0)^{-1} * K * diag(phiT); row-stochastic.
Matrix one_step_transition(const Matrix& kernel, const SchrodingerPotentials& potentials);

/// Backward recursion phi(t) = K(t) phi(t+1) from phi(T) = phiT and forward
/// recursion phihat(t+1) = K(t)ᵀ phihat(t) from phihat(0) = phihat0.
Harmonics propagate_harmonics(const MarkovPrior& prior, const Vector& phiT,
                              const Vector& phihat0);

/// Full multi-step bridge: composes the prior kernels, solves the one-step
/// system on the product (positivity is checked on the product, not the
/// factors), propagates harmonics and assembles per-step kernels, bridge
/// marginals phi(t) ⊙ phihat(t) and the endpoint coupling.
BridgeSolution solve_bridge(const MarkovPrior& prior, const Vector& p0,
                            const Vector& pT, const SolveOptions& options = {});

struct SinkhornResult {
  Matrix doubly_stochastic;
  SchrodingerPotentials potentials;
  SolveReport report;
};

/// Diagonal rescaling of a strictly positive kernel to doubly stochastic
/// form: the one-step solve with uniform marginals at both ends.
SinkhornResult sinkhorn_doubly_stochastic(const Matrix& kernel,
                                          const SolveOptions& options = {});

/// Residuals of the Schrödinger system and the coupling's marginal sums,
/// recomputable from emitted data.
ResidualTable classical_residuals(const Matrix& kernel, const Vector& p0,
                                  const Vector& pT,
                                  const SchrodingerPotentials& potentials,
                                  const Matrix& joint);

}  // namespace bridgekit
