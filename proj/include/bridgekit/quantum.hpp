// quantum.hpp — Kraus maps and the quantum Schrödinger systems: the doubly
// stochastic construction for uniform marginals, the general-marginal
// fixed-point iteration with residual verification, the pure-state closed
// form and multi-step assembly.

#pragma once

#include <optional>
#include <random>
#include <span>

#include "bridgekit/core.hpp"

namespace bridgekit {

/// Trace-preserving completely positive map in Kraus form: rho -> Σ E_i rho E_i†
/// with Σ E_i† E_i = I (checked within 1e-10 at construction).
class KrausMap {
 public:
  explicit KrausMap(std::vector<CMatrix> coeffs);

  int dimension() const { return static_cast<int>(coeffs_.front().rows()); }
  int coefficient_count() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<CMatrix>& coeffs() const { return coeffs_; }

  /// Σ E_i X E_i† — the action on states; preserves trace and positivity.
  CMatrix apply(const CMatrix& rho) const;

  /// Σ E_i† X E_i — the adjoint in the trace pairing; unital.
  CMatrix apply_adjoint(const CMatrix& X) const;

 private:
  std::vector<CMatrix> coeffs_;
};

/// Kraus form of the composition later ∘ earlier: coefficients are all
/// products later_j * earlier_i, j-major. Throws above max_coeffs.
KrausMap compose(const KrausMap& later, const KrausMap& earlier, int max_coeffs = 4096);
KrausMap compose(std::span<const KrausMap> steps, int max_coeffs = 4096);

enum class Positivity { PassSampled, Fail, Inconclusive };

struct PositivityCheck {
  Positivity status = Positivity::Inconclusive;
  // For Fail: a unit vector v whose projector vv† maps to a singular output
  // (or any vector when the coefficient-count condition already fails).
  std::optional<CVector> witness;
  double min_eigenvalue_seen = kInf;
};

/// Heuristic test that the map sends every density strictly inside the cone.
/// Fails outright when coefficient_count <= dimension (a necessary condition
/// for positivity improving is more coefficients than the dimension) or when
/// a sampled rank-one input yields a non-PD output. A pass is only "sampled",
/// never a proof; borderline smallest eigenvalues give Inconclusive.
PositivityCheck check_positivity_improving(const KrausMap& map, int trials,
                                           std::uint64_t seed = 0);

/// Haar-random Kraus map with the given coefficient count (isometry blocks
/// from a QR factorization of a Ginibre matrix).
KrausMap random_kraus_map(int n, int n_coeffs, std::mt19937_64& rng);

/// The four positive-definite observables of the quantum Schrödinger system.
struct QuantumPotentials {
  CMatrix phi0, phiT, phihat0, phihatT;
};

struct QuantumBridgeResult {
  QuantumPotentials potentials;
  // Transformed map F in Kraus form, F_i = chiT E_i chi0^{-1}; empty when the
  // iteration did not converge.
  std::optional<KrausMap> transformed;
  // Multi-step solves: per-step transformed maps and the densities rho_t.
  std::vector<KrausMap> step_maps;
  std::vector<CMatrix> intermediate_densities;
  SolveReport report;
  // Machine-checkable certificate: the solved system and bridge conditions,
  // recomputed from the returned data.
  ResidualTable verification;

  bool verified() const { return all_within_tolerance(verification); }
};

/// Uniform-marginal solver: iterate phihatT <- apply(phihat0),
/// phiT <- phihatT^{-1}, phi0 <- apply_adjoint(phiT), phihat0 <- phi0^{-1}
/// from phihat0 = I until the PD-cone Hilbert distance between successive
/// iterates drops below tol, then build F_i = chiT E_i chi0^{-1}. The
/// resulting map and its adjoint are both unital. Requires a sampled
/// positivity-improving pass unless overridden. `initial` replaces the
/// identity start (the fixed ray is unique, so any PD start converges to the
/// same potentials up to scale).
QuantumBridgeResult solve_doubly_stochastic(const KrausMap& map,
                                            const SolveOptions& options = {},
                                            const std::optional<CMatrix>& initial = {});

/// General-marginal solver (conjecture-scoped): same cycle with the inversions
/// replaced by the boundary-condition maps
///   phiT    = (rhoT^{1/2} (rhoT^{-1/2} phihatT^{-1} rhoT^{-1/2})^{1/2} rhoT^{1/2})^2
///   phihat0 = phi0^{-1/2} rho0 phi0^{-1/2}.
/// Success is certified by the verification residuals, not by convergence of
/// the iteration alone; non-convergence is a reportable outcome carrying the
/// residual trace. Marginals must be strictly positive definite (route pure
/// states to pure_state_bridge).
QuantumBridgeResult solve_general_bridge(const KrausMap& map, const CMatrix& rho0,
                                         const CMatrix& rhoT,
                                         const SolveOptions& options = {},
                                         const std::optional<CMatrix>& initial = {});

/// Closed-form bridge between pure states rho0 = v0 v0†, rhoT = vT vT† for a
/// positivity-improving map: phi0 = E†(vT vT†), phiT = vT vT† (rank one, so
/// the PD solver path is bypassed).
QuantumBridgeResult pure_state_bridge(const KrausMap& map, const CVector& v0,
                                      const CVector& vT);

/// Multi-step bridge: composes the step maps (coefficient products, capped by
/// max_coeffs), solves the one-step general bridge on the composition, then
/// propagates potentials through the steps: phihat_{i} forward, phi_{i}
/// backward, rho_i = phi_i^{1/2} phihat_i phi_i^{1/2}, and per-step maps
/// F_{t,i} = phi_{t+1}^{1/2} E_{t,i} phi_t^{-1/2}.
QuantumBridgeResult multistep_bridge(std::span<const KrausMap> steps,
                                     const CMatrix& rho0, const CMatrix& rhoT,
                                     const SolveOptions& options = {},
                                     int max_coeffs = 4096);

/// Residuals certifying a doubly stochastic solution: the harmonic relations,
/// phihat = phi^{-1} at both endpoints, and unitality of F and F†.
ResidualTable doubly_stochastic_residuals(const KrausMap& map,
                                          const QuantumPotentials& potentials,
                                          const KrausMap& transformed);

/// Residuals certifying a general bridge: the harmonic relations, the
/// boundary conditions chi rho-sandwiches, F's unitality and F(rho0) = rhoT.
ResidualTable quantum_bridge_residuals(const KrausMap& map, const CMatrix& rho0,
                                       const CMatrix& rhoT,
                                       const QuantumPotentials& potentials,
                                       const KrausMap& transformed,
                                       Gauge gauge = Gauge::Hermitian);

/// Residuals of the pure-state closed form: unitality, the endpoint
/// condition, and the rank-one boundary sandwiches.
ResidualTable pure_state_residuals(const KrausMap& map, const CVector& v0,
                                   const CVector& vT,
                                   const QuantumPotentials& potentials,
                                   const KrausMap& transformed);

/// Per-step residuals of a multi-step solution: trace preservation of every
/// step map, the endpoint reached by composing them, and validity of the
/// intermediate densities.
ResidualTable multistep_step_residuals(const CMatrix& rho0, const CMatrix& rhoT,
                                       std::span<const KrausMap> step_maps,
                                       std::span<const CMatrix> intermediate_densities);

}  // namespace bridgekit
