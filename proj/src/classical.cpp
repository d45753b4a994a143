#include "bridgekit/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bridgekit/cone.hpp"

namespace bridgekit {

namespace {

constexpr int kIterationCap = 100000;
constexpr int kIterationFloor = 32;

// 10x the iterations a geometric decay at `rate` needs to reach tol.
int default_max_iter(double tol, double rate) {
  if (!(rate > 0.0)) return kIterationFloor;
  if (rate >= 1.0) return kIterationCap;
  const double needed = std::log(tol) / std::log(rate);
  if (!std::isfinite(needed) || needed >= kIterationCap / 10.0) return kIterationCap;
  return std::clamp(10 * static_cast<int>(std::ceil(needed)), kIterationFloor,
                    kIterationCap);
}

// Componentwise num/den with 0/0 = 0; a positive numerator over a zero
// denominator means the kernel cannot carry the requested mass.
Vector divide_marginal(const Vector& num, const Vector& den) {
  Vector out(num.size());
  for (Eigen::Index i = 0; i < num.size(); ++i) {
    if (den(i) > 0.0) {
      out(i) = num(i) / den(i);
    } else if (num(i) == 0.0) {
      out(i) = 0.0;
    } else {
      throw ConeBoundaryError(
          "solve_one_step: potential vanished on a state with positive target mass "
          "(kernel too sparse)");
    }
  }
  return out;
}

void validate_kernel_shape(const Matrix& kernel, Eigen::Index n, const char* what) {
  if (kernel.rows() != kernel.cols())
    throw InvalidInput(std::string(what) + ": kernel is not square");
  if (kernel.rows() != n)
    throw InvalidInput(std::string(what) + ": kernel size does not match the marginals");
  if (kernel.minCoeff() < 0.0)
    throw InvalidInput(std::string(what) + ": kernel has negative entries");
}

double relative_error(const Vector& got, const Vector& want) {
  const double scale = std::max(want.cwiseAbs().maxCoeff(), 1e-300);
  return (got - want).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

void validate_probability_vector(const Vector& p, const char* what) {
  if (p.size() == 0) throw InvalidInput(std::string(what) + ": empty vector");
  if (p.minCoeff() < 0.0)
    throw InvalidInput(std::string(what) + ": negative entry");
  if (std::abs(p.sum() - 1.0) > 1e-12)
    throw InvalidInput(std::string(what) + ": entries sum to " + std::to_string(p.sum()) +
                       ", not 1");
}

void validate_stochastic_matrix(const Matrix& P, const char* what) {
  if (P.rows() == 0 || P.rows() != P.cols())
    throw InvalidInput(std::string(what) + ": matrix is not square");
  if (P.minCoeff() < 0.0)
    throw InvalidInput(std::string(what) + ": negative entry");
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    if (std::abs(P.row(i).sum() - 1.0) > 1e-12)
      throw InvalidInput(std::string(what) + ": row " + std::to_string(i) +
                         " sums to " + std::to_string(P.row(i).sum()) + ", not 1");
}

double relative_entropy(const Matrix& Q, const Matrix& P) {
  if (Q.rows() != P.rows() || Q.cols() != P.cols())
    throw InvalidInput("relative_entropy: dimension mismatch");
  if (Q.minCoeff() < 0.0 || P.minCoeff() < 0.0)
    throw InvalidInput("relative_entropy: negative entries");
  if (std::abs(Q.sum() - 1.0) > 1e-10 || std::abs(P.sum() - 1.0) > 1e-10)
    throw InvalidInput("relative_entropy: arguments must have total mass 1");

  double d = 0.0;
  for (Eigen::Index i = 0; i < Q.rows(); ++i) {
    for (Eigen::Index j = 0; j < Q.cols(); ++j) {
      const double q = Q(i, j);
      if (q == 0.0) continue;
      const double p = P(i, j);
      if (p == 0.0) return kInf;  // Supp(Q) not contained in Supp(P)
      d += q * std::log(q / p);
    }
  }
  return d;
}

std::pair<SchrodingerPotentials, SolveReport>
solve_one_step(const Matrix& kernel, const Vector& p0, const Vector& pT,
               const SolveOptions& options) {
  validate_probability_vector(p0, "solve_one_step: p0");
  validate_probability_vector(pT, "solve_one_step: pT");
  if (p0.size() != pT.size())
    throw InvalidInput("solve_one_step: marginals have different lengths");
  validate_kernel_shape(kernel, p0.size(), "solve_one_step");
  if (kernel.minCoeff() <= 0.0 && !options.override_positivity_check)
    throw InvalidInput(
        "solve_one_step: kernel has zero entries; pass "
        "override_positivity_check to iterate without a convergence guarantee");
  if (!(options.tol > 0.0)) throw InvalidInput("solve_one_step: tol must be > 0");

  const double diameter = projective_diameter(kernel);
  const double rate = birkhoff_contraction_ratio(diameter);
  const int budget =
      options.max_iter > 0 ? options.max_iter : default_max_iter(options.tol, rate);

  SolveReport report;
  report.contraction_bound = rate;

  const Matrix kernel_t = kernel.transpose();
  Vector phihat0 = Vector::Ones(p0.size());
  for (int iter = 1; iter <= budget; ++iter) {
    const Vector phihatT = kernel_t * phihat0;
    const Vector phiT = divide_marginal(pT, phihatT);
    const Vector phi0 = kernel * phiT;
    Vector next = divide_marginal(p0, phi0);
    next /= next.maxCoeff();  // projective freedom; keeps the iterate O(1)

    const double residual = detail::ray_distance(next, phihat0);
    report.residual_trace.push_back(residual);
    report.iterations = iter;
    phihat0 = next;
    if (residual < options.tol) {
      report.converged = true;
      break;
    }
  }
  report.final_residual = report.residual_trace.back();

  // Rebuild the chain from the final iterate so the harmonic relations hold
  // exactly, then scale the hat pair so <phihat0, phi0> = 1 (which is also
  // the total mass of the coupling built from these potentials).
  SchrodingerPotentials potentials;
  potentials.phihatT = kernel_t * phihat0;
  potentials.phiT = divide_marginal(pT, potentials.phihatT);
  potentials.phi0 = kernel * potentials.phiT;
  const double mass = phihat0.dot(potentials.phi0);
  potentials.phihat0 = phihat0 / mass;
  potentials.phihatT /= mass;
  return {std::move(potentials), std::move(report)};
}

Matrix one_step_joint(const SchrodingerPotentials& potentials, const Matrix& kernel) {
  validate_kernel_shape(kernel, potentials.phihat0.size(), "one_step_joint");
  return potentials.phihat0.asDiagonal() * kernel * potentials.phiT.asDiagonal();
}

Matrix one_step_transition(const Matrix& kernel, const SchrodingerPotentials& potentials) {
  validate_kernel_shape(kernel, potentials.phi0.size(), "one_step_transition");
  if (potentials.phi0.minCoeff() <= 0.0)
    throw ConeBoundaryError("one_step_transition: phi0 has a zero entry");
  return potentials.phi0.cwiseInverse().asDiagonal() * kernel *
         potentials.phiT.asDiagonal();
}

Harmonics propagate_harmonics(const MarkovPrior& prior, const Vector& phiT,
                              const Vector& phihat0) {
  const int n = prior.dimension();
  const int T = prior.steps();
  if (T < 1) throw InvalidInput("propagate_harmonics: prior has no kernels");
  for (const Matrix& K : prior.kernels)
    if (K.rows() != n || K.cols() != n)
      throw InvalidInput("propagate_harmonics: kernel dimensions do not match the prior");
  if (phiT.size() != n || phihat0.size() != n)
    throw InvalidInput("propagate_harmonics: vector length does not match the kernels");
  if (phiT.minCoeff() < 0.0 || phihat0.minCoeff() < 0.0)
    throw InvalidInput("propagate_harmonics: negative entries");

  Harmonics h;
  h.phi.assign(T + 1, Vector());
  h.phihat.assign(T + 1, Vector());
  h.phi[T] = phiT;
  for (int t = T - 1; t >= 0; --t) h.phi[t] = prior.kernels[t] * h.phi[t + 1];
  h.phihat[0] = phihat0;
  for (int t = 0; t < T; ++t) h.phihat[t + 1] = prior.kernels[t].transpose() * h.phihat[t];
  return h;
}

BridgeSolution solve_bridge(const MarkovPrior& prior, const Vector& p0,
                            const Vector& pT, const SolveOptions& options) {
  const int n = prior.dimension();
  const int T = prior.steps();
  if (T < 1) throw InvalidInput("solve_bridge: prior has no kernels");
  for (int t = 0; t < T; ++t)
    validate_stochastic_matrix(prior.kernels[t], "solve_bridge: prior kernel");
  if (prior.kernels[0].rows() != n)
    throw InvalidInput("solve_bridge: prior initial law does not match the kernels");

  Matrix product = prior.kernels[0];
  for (int t = 1; t < T; ++t) product = product * prior.kernels[t];
  if (product.minCoeff() <= 0.0 && !options.override_positivity_check)
    throw InvalidInput(
        "solve_bridge: composed kernel has zero entries; pass "
        "override_positivity_check to iterate without a convergence guarantee");

  BridgeSolution solution;
  auto [potentials, report] = solve_one_step(product, p0, pT, options);
  solution.potentials = potentials;
  solution.report = std::move(report);
  solution.joint = one_step_joint(potentials, product);
  solution.harmonics = propagate_harmonics(prior, potentials.phiT, potentials.phihat0);

  solution.step_kernels.reserve(T);
  for (int t = 0; t < T; ++t) {
    const Vector& phi_t = solution.harmonics.phi[t];
    const Vector& phi_next = solution.harmonics.phi[t + 1];
    Matrix K = prior.kernels[t];
    for (int i = 0; i < n; ++i) {
      // A state with phi(t,i) = 0 carries no bridge mass at time t; its
      // outgoing row is irrelevant to the law, so keep the prior's row to
      // stay stochastic.
      if (phi_t(i) > 0.0)
        K.row(i) = prior.kernels[t].row(i).cwiseProduct(phi_next.transpose()) / phi_t(i);
    }
    solution.step_kernels.push_back(std::move(K));
  }

  solution.marginals.reserve(T + 1);
  for (int t = 0; t <= T; ++t)
    solution.marginals.push_back(
        solution.harmonics.phi[t].cwiseProduct(solution.harmonics.phihat[t]));
  return solution;
}

SinkhornResult sinkhorn_doubly_stochastic(const Matrix& kernel,
                                          const SolveOptions& options) {
  if (kernel.rows() == 0 || kernel.rows() != kernel.cols())
    throw InvalidInput("sinkhorn_doubly_stochastic: matrix is not square");
  const Vector uniform = Vector::Constant(kernel.rows(), 1.0 / double(kernel.rows()));
  auto [potentials, report] = solve_one_step(kernel, uniform, uniform, options);
  SinkhornResult result;
  result.doubly_stochastic = one_step_transition(kernel, potentials);
  result.potentials = std::move(potentials);
  result.report = std::move(report);
  return result;
}

ResidualTable classical_residuals(const Matrix& kernel, const Vector& p0,
                                  const Vector& pT,
                                  const SchrodingerPotentials& potentials,
                                  const Matrix& joint) {
  ResidualTable table;
  table.push_back({"harmonic_phi0",
                   relative_error(kernel * potentials.phiT, potentials.phi0), 1e-10});
  table.push_back({"coharmonic_phihatT",
                   relative_error(kernel.transpose() * potentials.phihat0,
                                  potentials.phihatT),
                   1e-10});
  table.push_back({"boundary_p0",
                   (potentials.phi0.cwiseProduct(potentials.phihat0) - p0)
                       .cwiseAbs()
                       .maxCoeff(),
                   1e-10});
  table.push_back({"boundary_pT",
                   (potentials.phiT.cwiseProduct(potentials.phihatT) - pT)
                       .cwiseAbs()
                       .maxCoeff(),
                   1e-10});
  table.push_back({"joint_row_sums",
                   (joint.rowwise().sum() - p0).cwiseAbs().maxCoeff(), 1e-9});
  table.push_back({"joint_col_sums",
                   (joint.colwise().sum().transpose() - pT).cwiseAbs().maxCoeff(), 1e-9});
  table.push_back({"joint_mass", std::abs(joint.sum() - 1.0), 1e-10});
  return table;
}

}  // namespace bridgekit
