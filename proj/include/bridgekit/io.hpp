// io.hpp — JSON encoding of solver inputs and outputs, and the result-bundle
// format produced by the CLI: matrices as arrays of rows, complex entries as
// [re, im] pairs, Kraus maps as arrays of matrices.

#pragma once

#include <string>

#include "json.hpp"

#include "bridgekit/classical.hpp"
#include "bridgekit/quantum.hpp"

namespace bridgekit::io {

using json = nlohmann::json;

/// JSON numbers cannot carry non-finite values; residual traces may contain
/// +inf, encoded as the strings "inf" / "-inf" / "nan".
json encode_double(double x);
double decode_double(const json& j);

json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const CVector& v);
json to_json(const CMatrix& m);
json to_json(const KrausMap& map);
json to_json(const SolveReport& report);
json to_json(const ResidualTable& table);
json to_json(const SchrodingerPotentials& p);
json to_json(const QuantumPotentials& p);
json to_json(const MarkovPrior& prior);

Vector vector_from_json(const json& j, const std::string& what);
Matrix matrix_from_json(const json& j, const std::string& what);
CVector cvector_from_json(const json& j, const std::string& what);
CMatrix cmatrix_from_json(const json& j, const std::string& what);
KrausMap kraus_from_json(const json& j, const std::string& what);
MarkovPrior prior_from_json(const json& j, const std::string& what);
SolveReport report_from_json(const json& j);
ResidualTable residuals_from_json(const json& j);
SchrodingerPotentials schrodinger_potentials_from_json(const json& j);
QuantumPotentials quantum_potentials_from_json(const json& j);

std::string gauge_name(Gauge gauge);
Gauge gauge_from_name(const std::string& name);

json solver_to_json(const SolveOptions& options);

struct VerifyOutcome {
  ResidualTable recomputed;
  bool matches_stored = false;    // every recomputed value within 1e-12 of the stored one
  bool within_tolerance = false;  // every residual below its declared tolerance
  std::string detail;             // names the first failing entry, empty when clean
};

/// Recompute the full residual table of a bundle from its emitted inputs and
/// outputs and compare against the stored table.
VerifyOutcome verify_bundle(const json& bundle);

/// Plain-text report: outcome, residual table and (optionally) the two-column
/// (iteration, residual) convergence trace for external plotting.
std::string format_summary(const json& bundle, bool include_trace = true);

}  // namespace bridgekit::io
