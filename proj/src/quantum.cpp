#include "bridgekit/quantum.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <string>
#include <utility>

#include "bridgekit/cone.hpp"
#include "bridgekit/hermitian.hpp"
#include "bridgekit/sampling.hpp"

namespace bridgekit {

namespace {

constexpr int kQuantumIterationCap = 100000;
constexpr int kPositivityTrials = 16;

double matrix_rel_error(const CMatrix& got, const CMatrix& want) {
  const double scale = std::max(want.cwiseAbs().maxCoeff(), 1e-300);
  return (got - want).cwiseAbs().maxCoeff() / scale;
}

double matrix_abs_error(const CMatrix& got, const CMatrix& want) {
  return (got - want).cwiseAbs().maxCoeff();
}

CMatrix gauge_factor(const CMatrix& phi, Gauge gauge) {
  if (gauge == Gauge::Hermitian) return hermitian_sqrt(phi);
  // chi with chi† chi = phi and chi upper triangular.
  Eigen::LLT<CMatrix> llt(hermitian_part(phi));
  if (llt.info() != Eigen::Success)
    throw ConeBoundaryError("gauge_factor: Cholesky failed, matrix not positive definite");
  return CMatrix(llt.matrixL()).adjoint();
}

void require_strictly_pd_marginal(const CMatrix& rho, const char* what) {
  validate_density_matrix(rho, what);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(rho), Eigen::EigenvaluesOnly);
  const Vector& w = es.eigenvalues();
  if (w(0) <= 1e-12 * w(w.size() - 1))
    throw InvalidInput(std::string(what) +
                       ": marginal is singular or nearly so; use pure_state_bridge for "
                       "rank-one states, or perturb a rank-deficient mixed state into "
                       "the interior");
}

void run_positivity_gate(const KrausMap& map, const SolveOptions& options,
                         const char* what) {
  if (options.override_positivity_check) return;
  const PositivityCheck check =
      check_positivity_improving(map, kPositivityTrials, options.seed);
  if (check.status == Positivity::Fail)
    throw InvalidInput(std::string(what) +
                       ": map failed the positivity-improving check (necessary "
                       "condition or sampled witness); pass override_positivity_check "
                       "to iterate anyway");
  if (check.status == Positivity::Inconclusive)
    throw InvalidInput(std::string(what) +
                       ": positivity-improving check inconclusive (borderline "
                       "eigenvalues); pass override_positivity_check to iterate anyway");
}

}  // namespace

KrausMap::KrausMap(std::vector<CMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("KrausMap: no coefficients");
  const Eigen::Index n = coeffs_.front().rows();
  if (n < 1) throw InvalidInput("KrausMap: empty coefficient");
  CMatrix sum = CMatrix::Zero(n, n);
  for (const CMatrix& E : coeffs_) {
    if (E.rows() != n || E.cols() != n)
      throw InvalidInput("KrausMap: coefficients must be square with equal dimensions");
    sum += E.adjoint() * E;
  }
  if ((sum - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidInput("KrausMap: sum of E† E is not the identity (map is not "
                       "trace preserving)");
}

CMatrix KrausMap::apply(const CMatrix& rho) const {
  const Eigen::Index n = dimension();
  if (rho.rows() != n || rho.cols() != n)
    throw InvalidInput("KrausMap::apply: dimension mismatch");
  CMatrix out = CMatrix::Zero(n, n);
  for (const CMatrix& E : coeffs_) out += E * rho * E.adjoint();
  return out;
}

CMatrix KrausMap::apply_adjoint(const CMatrix& X) const {
  const Eigen::Index n = dimension();
  if (X.rows() != n || X.cols() != n)
    throw InvalidInput("KrausMap::apply_adjoint: dimension mismatch");
  CMatrix out = CMatrix::Zero(n, n);
  for (const CMatrix& E : coeffs_) out += E.adjoint() * X * E;
  return out;
}

KrausMap compose(const KrausMap& later, const KrausMap& earlier, int max_coeffs) {
  if (later.dimension() != earlier.dimension())
    throw InvalidInput("compose: Kraus maps act on different dimensions");
  const long count =
      static_cast<long>(later.coefficient_count()) * earlier.coefficient_count();
  if (count > max_coeffs)
    throw InvalidInput("compose: composition would need " + std::to_string(count) +
                       " coefficients, above the cap of " + std::to_string(max_coeffs));
  std::vector<CMatrix> coeffs;
  coeffs.reserve(count);
  for (const CMatrix& L : later.coeffs())
    for (const CMatrix& E : earlier.coeffs()) coeffs.push_back(L * E);
  return KrausMap(std::move(coeffs));
}

KrausMap compose(std::span<const KrausMap> steps, int max_coeffs) {
  if (steps.empty()) throw InvalidInput("compose: no steps");
  KrausMap out = steps[0];
  for (std::size_t t = 1; t < steps.size(); ++t)
    out = compose(steps[t], out, max_coeffs);
  return out;
}

PositivityCheck check_positivity_improving(const KrausMap& map, int trials,
                                           std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("check_positivity_improving: trials must be >= 1");
  const int n = map.dimension();
  PositivityCheck out;

  if (map.coefficient_count() <= n) {
    // Necessary condition: with at most n coefficients some input projector
    // maps onto a singular output. A pencil eigenvector of (E_1, E_2) (or a
    // kernel vector of E_2) makes {E_i v} linearly dependent.
    out.status = Positivity::Fail;
    out.min_eigenvalue_seen = 0.0;
    CVector v = CVector::Unit(n, 0);
    if (map.coefficient_count() >= 2 && n >= 2) {
      const CMatrix& E2 = map.coeffs()[1];
      Eigen::JacobiSVD<CMatrix> svd(E2, Eigen::ComputeFullV);
      if (svd.singularValues()(n - 1) < 1e-12 * (svd.singularValues()(0) + 1e-300)) {
        v = svd.matrixV().col(n - 1);
      } else {
        Eigen::ComplexEigenSolver<CMatrix> es(E2.inverse() * map.coeffs()[0]);
        v = es.eigenvectors().col(0);
      }
      v /= v.norm();
    }
    out.witness = v;
    return out;
  }

  std::mt19937_64 rng(seed);
  double worst_relative = kInf;
  for (int t = 0; t < trials; ++t) {
    const CVector v = random_unit_vector(n, rng);
    const CMatrix image = hermitian_part(map.apply(v * v.adjoint()));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(image, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0);
    const double hi = es.eigenvalues()(n - 1);
    out.min_eigenvalue_seen = std::min(out.min_eigenvalue_seen, lo);
    if (lo <= 0.0) {
      out.status = Positivity::Fail;
      out.witness = v;
      return out;
    }
    worst_relative = std::min(worst_relative, lo / hi);
  }
  out.status = worst_relative > 1e-12 ? Positivity::PassSampled : Positivity::Inconclusive;
  return out;
}

KrausMap random_kraus_map(int n, int n_coeffs, std::mt19937_64& rng) {
  if (n < 1 || n_coeffs < 1) throw InvalidInput("random_kraus_map: bad dimensions");
  const CMatrix G = random_ginibre(n * n_coeffs, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(G);
  const CMatrix Q = CMatrix(qr.householderQ()).leftCols(n);  // isometry, Q†Q = I
  std::vector<CMatrix> coeffs;
  coeffs.reserve(n_coeffs);
  for (int i = 0; i < n_coeffs; ++i) coeffs.push_back(Q.middleRows(i * n, n));
  return KrausMap(std::move(coeffs));
}

QuantumBridgeResult solve_doubly_stochastic(const KrausMap& map,
                                            const SolveOptions& options,
                                            const std::optional<CMatrix>& initial) {
  if (!(options.tol > 0.0)) throw InvalidInput("solve_doubly_stochastic: tol must be > 0");
  run_positivity_gate(map, options, "solve_doubly_stochastic");

  const int n = map.dimension();
  const int budget = options.max_iter > 0 ? options.max_iter : kQuantumIterationCap;

  QuantumBridgeResult result;
  if (options.diameter_samples > 0) {
    const ChannelFn backward = [&map](const CMatrix& X) { return map.apply_adjoint(X); };
    const double diameter = estimate_projective_diameter(
        backward, n, options.diameter_samples, options.seed);
    result.report.contraction_bound = birkhoff_contraction_ratio(diameter);
  }

  // The cycle is homogeneous of degree one, so the iterate is kept at trace n
  // and the accumulated scale is restored at exit; this equals the raw
  // iteration started from the chosen starting point.
  CMatrix u = CMatrix::Identity(n, n);
  double log_scale = 0.0;
  if (initial.has_value()) {
    if (initial->rows() != n || initial->cols() != n)
      throw InvalidInput("solve_doubly_stochastic: initial iterate dimension mismatch");
    require_positive_definite(*initial, "solve_doubly_stochastic: initial iterate");
    const double tr = initial->trace().real();
    u = hermitian_part(*initial) * (n / tr);
    log_scale = std::log(tr / n);
  }
  for (int iter = 1; iter <= budget; ++iter) {
    try {
      const CMatrix phihatT = map.apply(u);
      const CMatrix phiT = hermitian_inverse(phihatT);
      const CMatrix phi0 = map.apply_adjoint(phiT);
      CMatrix next = hermitian_inverse(phi0);
      const double growth = next.trace().real() / n;
      next /= growth;
      log_scale += std::log(growth);

      const double residual = detail::psd_ray_distance(next, u);
      result.report.residual_trace.push_back(residual);
      result.report.iterations = iter;
      u = next;
      if (residual < options.tol) {
        result.report.converged = true;
        break;
      }
    } catch (const ConeBoundaryError& e) {
      throw ConeBoundaryError("solve_doubly_stochastic: iterate left the PD cone at "
                              "iteration " + std::to_string(iter) +
                              " (map is likely not positivity improving): " + e.what());
    }
  }
  result.report.final_residual = result.report.residual_trace.back();

  // Close the cycle exactly: phihat = phi^{-1} at both ends, phi0 = E(phiT).
  const CMatrix phihat0_raw = std::exp(log_scale) * u;
  QuantumPotentials p;
  p.phihatT = hermitian_part(map.apply(phihat0_raw));
  p.phiT = hermitian_inverse(p.phihatT);
  p.phi0 = hermitian_part(map.apply_adjoint(p.phiT));
  p.phihat0 = hermitian_inverse(p.phi0);

  const CMatrix chi0 = gauge_factor(p.phi0, options.gauge);
  const CMatrix chiT = gauge_factor(p.phiT, options.gauge);
  const CMatrix chi0_inv = chi0.inverse();
  std::vector<CMatrix> f;
  f.reserve(map.coefficient_count());
  for (const CMatrix& E : map.coeffs()) f.push_back(chiT * E * chi0_inv);
  result.transformed = KrausMap(std::move(f));
  result.potentials = std::move(p);
  result.verification =
      doubly_stochastic_residuals(map, result.potentials, *result.transformed);
  return result;
}

QuantumBridgeResult solve_general_bridge(const KrausMap& map, const CMatrix& rho0,
                                         const CMatrix& rhoT,
                                         const SolveOptions& options,
                                         const std::optional<CMatrix>& initial) {
  if (!(options.tol > 0.0)) throw InvalidInput("solve_general_bridge: tol must be > 0");
  if (options.gauge != Gauge::Hermitian)
    throw InvalidInput("solve_general_bridge: only the Hermitian gauge is supported "
                       "for general marginals (the boundary-condition maps are "
                       "specific to Hermitian roots)");
  const int n = map.dimension();
  if (rho0.rows() != n || rhoT.rows() != n)
    throw InvalidInput("solve_general_bridge: marginal dimension mismatch");
  require_strictly_pd_marginal(rho0, "solve_general_bridge: rho0");
  require_strictly_pd_marginal(rhoT, "solve_general_bridge: rhoT");
  run_positivity_gate(map, options, "solve_general_bridge");

  const CMatrix rhoT_sqrt = hermitian_sqrt(rhoT);
  const CMatrix rhoT_inv_sqrt = hermitian_inv_sqrt(rhoT);

  // phiT solving phiT^{1/2} phihatT phiT^{1/2} = rhoT, evaluated as the
  // nested expression with re-Hermitization after each product.
  const auto boundary_map_T = [&](const CMatrix& phihatT) {
    const CMatrix inner = hermitian_sqrt(
        hermitian_part(rhoT_inv_sqrt * hermitian_inverse(phihatT) * rhoT_inv_sqrt));
    const CMatrix root = hermitian_part(rhoT_sqrt * inner * rhoT_sqrt);
    return hermitian_part(root * root);
  };
  // phihat0 solving phi0^{1/2} phihat0 phi0^{1/2} = rho0.
  const auto boundary_map_0 = [&](const CMatrix& phi0) {
    const CMatrix m = hermitian_inv_sqrt(phi0);
    return hermitian_part(m * rho0 * m);
  };

  const int budget = options.max_iter > 0 ? options.max_iter : kQuantumIterationCap;
  QuantumBridgeResult result;

  CMatrix phihat0 = CMatrix::Identity(n, n);
  if (initial.has_value()) {
    if (initial->rows() != n || initial->cols() != n)
      throw InvalidInput("solve_general_bridge: initial iterate dimension mismatch");
    require_positive_definite(*initial, "solve_general_bridge: initial iterate");
    phihat0 = hermitian_part(*initial);
  }
  for (int iter = 1; iter <= budget; ++iter) {
    try {
      const CMatrix phihatT = hermitian_part(map.apply(phihat0));
      const CMatrix phiT = boundary_map_T(phihatT);
      const CMatrix phi0 = hermitian_part(map.apply_adjoint(phiT));
      const CMatrix next = boundary_map_0(phi0);

      const double residual = detail::psd_ray_distance(next, phihat0);
      result.report.residual_trace.push_back(residual);
      result.report.iterations = iter;
      phihat0 = next;
      if (residual < options.tol) {
        result.report.converged = true;
        break;
      }
    } catch (const ConeBoundaryError& e) {
      throw ConeBoundaryError("solve_general_bridge: iterate left the PD cone at "
                              "iteration " + std::to_string(iter) + ": " + e.what());
    }
  }
  result.report.final_residual = result.report.residual_trace.back();

  QuantumPotentials p;
  p.phihat0 = phihat0;
  p.phihatT = hermitian_part(map.apply(phihat0));
  p.phiT = boundary_map_T(p.phihatT);
  p.phi0 = hermitian_part(map.apply_adjoint(p.phiT));

  const CMatrix chi0_inv = hermitian_inv_sqrt(p.phi0);
  const CMatrix chiT = hermitian_sqrt(p.phiT);
  std::vector<CMatrix> f;
  f.reserve(map.coefficient_count());
  for (const CMatrix& E : map.coeffs()) f.push_back(chiT * E * chi0_inv);
  result.transformed = KrausMap(std::move(f));
  result.potentials = std::move(p);
  // Success is certified by these residuals, not by convergence alone.
  result.verification = quantum_bridge_residuals(map, rho0, rhoT, result.potentials,
                                                 *result.transformed, Gauge::Hermitian);
  return result;
}

QuantumBridgeResult pure_state_bridge(const KrausMap& map, const CVector& v0,
                                      const CVector& vT) {
  const int n = map.dimension();
  if (v0.size() != n || vT.size() != n)
    throw InvalidInput("pure_state_bridge: vector dimension mismatch");
  if (std::abs(v0.norm() - 1.0) > 1e-10 || std::abs(vT.norm() - 1.0) > 1e-10)
    throw InvalidInput("pure_state_bridge: states must be unit vectors");
  const CVector w0 = v0 / v0.norm();
  const CVector wT = vT / vT.norm();

  const CMatrix rho0 = w0 * w0.adjoint();
  const CMatrix rhoT = wT * wT.adjoint();
  const CMatrix phi0 = hermitian_part(map.apply_adjoint(rhoT));
  try {
    require_positive_definite(phi0, "pure_state_bridge: phi0");
  } catch (const ConeBoundaryError&) {
    throw ConeBoundaryError("pure_state_bridge: the image of the target projector is "
                            "not positive definite (map is not positivity improving)");
  }
  const CMatrix phi0_inv_sqrt = hermitian_inv_sqrt(phi0);

  // phiT = vT vT† is its own root on its support; no inversion of phiT occurs.
  std::vector<CMatrix> f;
  f.reserve(map.coefficient_count());
  for (const CMatrix& E : map.coeffs()) f.push_back(rhoT * E * phi0_inv_sqrt);

  QuantumBridgeResult result;
  result.transformed = KrausMap(std::move(f));
  result.potentials.phi0 = phi0;
  result.potentials.phiT = rhoT;
  result.potentials.phihat0 = hermitian_part(phi0_inv_sqrt * rho0 * phi0_inv_sqrt);
  result.potentials.phihatT = hermitian_part(map.apply(result.potentials.phihat0));
  result.report.iterations = 0;
  result.report.final_residual = 0.0;
  result.report.converged = true;
  result.verification =
      pure_state_residuals(map, w0, wT, result.potentials, *result.transformed);
  return result;
}

QuantumBridgeResult multistep_bridge(std::span<const KrausMap> steps,
                                     const CMatrix& rho0, const CMatrix& rhoT,
                                     const SolveOptions& options, int max_coeffs) {
  if (steps.empty()) throw InvalidInput("multistep_bridge: no steps");
  const int T = static_cast<int>(steps.size());
  const int n = steps[0].dimension();
  for (const KrausMap& E : steps)
    if (E.dimension() != n)
      throw InvalidInput("multistep_bridge: steps act on different dimensions");

  const KrausMap composed = compose(steps, max_coeffs);
  QuantumBridgeResult result = solve_general_bridge(composed, rho0, rhoT, options);

  // Propagate the endpoint potentials through the steps.
  std::vector<CMatrix> phi(T + 1), phihat(T + 1);
  phi[T] = result.potentials.phiT;
  for (int t = T - 1; t >= 0; --t)
    phi[t] = hermitian_part(steps[t].apply_adjoint(phi[t + 1]));
  phihat[0] = result.potentials.phihat0;
  for (int t = 0; t < T; ++t)
    phihat[t + 1] = hermitian_part(steps[t].apply(phihat[t]));

  std::vector<CMatrix> roots(T + 1), inv_roots(T + 1);
  for (int t = 0; t <= T; ++t) {
    roots[t] = hermitian_sqrt(phi[t]);
    inv_roots[t] = hermitian_inv_sqrt(phi[t]);
  }

  result.intermediate_densities.resize(T + 1);
  for (int t = 0; t <= T; ++t)
    result.intermediate_densities[t] = hermitian_part(roots[t] * phihat[t] * roots[t]);

  result.step_maps.clear();
  result.step_maps.reserve(T);
  for (int t = 0; t < T; ++t) {
    std::vector<CMatrix> f;
    f.reserve(steps[t].coefficient_count());
    for (const CMatrix& E : steps[t].coeffs())
      f.push_back(roots[t + 1] * E * inv_roots[t]);
    result.step_maps.emplace_back(std::move(f));
  }

  const ResidualTable extra = multistep_step_residuals(
      rho0, rhoT, result.step_maps, result.intermediate_densities);
  result.verification.insert(result.verification.end(), extra.begin(), extra.end());
  return result;
}

ResidualTable doubly_stochastic_residuals(const KrausMap& map,
                                          const QuantumPotentials& potentials,
                                          const KrausMap& transformed) {
  const int n = map.dimension();
  const CMatrix identity = CMatrix::Identity(n, n);
  ResidualTable table;
  table.push_back({"harmonic_phi",
                   matrix_rel_error(map.apply_adjoint(potentials.phiT), potentials.phi0),
                   1e-9});
  table.push_back({"coharmonic_phihat",
                   matrix_rel_error(map.apply(potentials.phihat0), potentials.phihatT),
                   1e-9});
  table.push_back({"inverse_pair_0",
                   matrix_abs_error(potentials.phihat0 * potentials.phi0, identity),
                   1e-9});
  table.push_back({"inverse_pair_T",
                   matrix_abs_error(potentials.phihatT * potentials.phiT, identity),
                   1e-9});
  table.push_back({"transformed_unital",
                   matrix_abs_error(transformed.apply_adjoint(identity), identity), 1e-9});
  table.push_back({"transformed_adjoint_unital",
                   matrix_abs_error(transformed.apply(identity), identity), 1e-9});
  return table;
}

ResidualTable pure_state_residuals(const KrausMap& map, const CVector& v0,
                                   const CVector& vT,
                                   const QuantumPotentials& potentials,
                                   const KrausMap& transformed) {
  const int n = map.dimension();
  const CMatrix identity = CMatrix::Identity(n, n);
  const CMatrix rho0 = v0 * v0.adjoint();
  const CMatrix rhoT = vT * vT.adjoint();
  const CMatrix root0 = hermitian_sqrt(potentials.phi0);
  ResidualTable table;
  table.push_back({"transformed_unital",
                   matrix_abs_error(transformed.apply_adjoint(identity), identity),
                   1e-10});
  table.push_back({"bridge_endpoint",
                   matrix_abs_error(transformed.apply(rho0), rhoT), 1e-10});
  table.push_back({"boundary_rho0",
                   matrix_abs_error(
                       hermitian_part(root0 * potentials.phihat0 * root0), rho0),
                   1e-9});
  // chiT is the target projector itself, its own root on its support.
  table.push_back({"boundary_rhoT",
                   matrix_abs_error(
                       hermitian_part(rhoT * potentials.phihatT * rhoT), rhoT),
                   1e-9});
  return table;
}

ResidualTable multistep_step_residuals(const CMatrix& rho0, const CMatrix& rhoT,
                                       std::span<const KrausMap> step_maps,
                                       std::span<const CMatrix> intermediate_densities) {
  if (step_maps.empty()) throw InvalidInput("multistep_step_residuals: no step maps");
  const int n = step_maps[0].dimension();
  const CMatrix identity = CMatrix::Identity(n, n);

  double tp_err = 0.0;
  for (const KrausMap& F : step_maps)
    tp_err = std::max(tp_err, matrix_abs_error(F.apply_adjoint(identity), identity));

  CMatrix evolved = rho0;
  for (const KrausMap& F : step_maps) evolved = F.apply(evolved);

  double density_err = 0.0;
  for (const CMatrix& rho : intermediate_densities) {
    density_err = std::max(density_err, std::abs(rho.trace().real() - 1.0));
    density_err = std::max(density_err, hermiticity_error(rho));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(rho), Eigen::EigenvaluesOnly);
    density_err = std::max(density_err, std::max(0.0, -es.eigenvalues()(0)));
  }

  ResidualTable table;
  table.push_back({"step_maps_trace_preserving", tp_err, 1e-9});
  table.push_back({"step_composition_endpoint", matrix_abs_error(evolved, rhoT), 1e-8});
  table.push_back({"intermediate_densities_valid", density_err, 1e-9});
  return table;
}

ResidualTable quantum_bridge_residuals(const KrausMap& map, const CMatrix& rho0,
                                       const CMatrix& rhoT,
                                       const QuantumPotentials& potentials,
                                       const KrausMap& transformed, Gauge gauge) {
  const int n = map.dimension();
  const CMatrix identity = CMatrix::Identity(n, n);
  const CMatrix chi0 = gauge_factor(potentials.phi0, gauge);
  const CMatrix chiT = gauge_factor(potentials.phiT, gauge);
  ResidualTable table;
  table.push_back({"harmonic_phi",
                   matrix_rel_error(map.apply_adjoint(potentials.phiT), potentials.phi0),
                   1e-9});
  table.push_back({"coharmonic_phihat",
                   matrix_rel_error(map.apply(potentials.phihat0), potentials.phihatT),
                   1e-9});
  table.push_back({"boundary_rho0",
                   matrix_abs_error(
                       hermitian_part(chi0 * potentials.phihat0 * chi0.adjoint()), rho0),
                   1e-9});
  table.push_back({"boundary_rhoT",
                   matrix_abs_error(
                       hermitian_part(chiT * potentials.phihatT * chiT.adjoint()), rhoT),
                   1e-9});
  table.push_back({"transformed_unital",
                   matrix_abs_error(transformed.apply_adjoint(identity), identity), 1e-9});
  table.push_back({"bridge_endpoint",
                   matrix_abs_error(transformed.apply(rho0), rhoT), 1e-9});
  return table;
}

}  // namespace bridgekit
