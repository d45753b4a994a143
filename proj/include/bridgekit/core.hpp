// core.hpp — shared aliases, error types, solver options and reports.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bridgekit {

using Vector  = Eigen::VectorXd;
using Matrix  = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Inputs violating a documented precondition: dimension mismatch, nonpositive
// entries, non-stochastic rows, malformed Kraus maps, ...
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value that must lie in the interior of a positive cone reached the
// boundary (an eigenvalue or entry at/below the relative floor).
class ConeBoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Factorization used for the multiplicative transformation coefficients.
enum class Gauge { Hermitian, Triangular };

struct SolveOptions {
  double tol = 1e-12;
  // 0 derives the budget from the contraction rate (classical solvers) or
  // uses the 1e5 cap (quantum solvers).
  int max_iter = 0;
  std::uint64_t seed = 0;
  // Sample count for the projective-diameter estimate behind
  // SolveReport::contraction_bound of the quantum solvers; 0 skips it.
  int diameter_samples = 32;
  Gauge gauge = Gauge::Hermitian;
  // Run anyway when the strict-positivity / positivity-improving guard fails;
  // the contraction guarantee is forfeited.
  bool override_positivity_check = false;
};

struct SolveReport {
  int iterations = 0;
  // Hilbert distance between successive fixed-point iterates.
  std::vector<double> residual_trace;
  double final_residual = kInf;
  // tanh(diameter/4); 1 when the diameter is infinite or not computed.
  double contraction_bound = 1.0;
  bool converged = false;
};

struct ResidualEntry {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
};
using ResidualTable = std::vector<ResidualEntry>;

inline bool all_within_tolerance(const ResidualTable& table) {
  for (const auto& r : table)
    if (!(r.value < r.tolerance)) return false;
  return true;
}

inline double max_residual(const ResidualTable& table) {
  double m = 0.0;
  for (const auto& r : table) m = std::max(m, r.value);
  return m;
}

}  // namespace bridgekit
