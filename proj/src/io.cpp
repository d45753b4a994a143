#include "bridgekit/io.hpp"

#include <cmath>
#include <sstream>

namespace bridgekit::io {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& why) {
  throw InvalidInput(what + ": " + why);
}

Complex complex_from_json(const json& j, const std::string& what) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  bad(what, "expected a number or a [re, im] pair");
}

}  // namespace

json encode_double(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double decode_double(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InvalidInput("expected a number or \"inf\"/\"-inf\"/\"nan\"");
}

json to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(json::array({v(i).real(), v(i).imag()}));
  return out;
}

json to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const KrausMap& map) {
  json out = json::array();
  for (const CMatrix& E : map.coeffs()) out.push_back(to_json(E));
  return out;
}

json to_json(const SolveReport& report) {
  json trace = json::array();
  for (double r : report.residual_trace) trace.push_back(encode_double(r));
  return json{{"iterations", report.iterations},
              {"converged", report.converged},
              {"final_residual", encode_double(report.final_residual)},
              {"contraction_bound", encode_double(report.contraction_bound)},
              {"residual_trace", std::move(trace)}};
}

json to_json(const ResidualTable& table) {
  json out = json::array();
  for (const auto& r : table)
    out.push_back(json{{"name", r.name},
                       {"value", encode_double(r.value)},
                       {"tolerance", r.tolerance}});
  return out;
}

json to_json(const SchrodingerPotentials& p) {
  return json{{"phi0", to_json(p.phi0)},
              {"phiT", to_json(p.phiT)},
              {"phihat0", to_json(p.phihat0)},
              {"phihatT", to_json(p.phihatT)}};
}

json to_json(const QuantumPotentials& p) {
  return json{{"phi0", to_json(p.phi0)},
              {"phiT", to_json(p.phiT)},
              {"phihat0", to_json(p.phihat0)},
              {"phihatT", to_json(p.phihatT)}};
}

json to_json(const MarkovPrior& prior) {
  json kernels = json::array();
  for (const Matrix& K : prior.kernels) kernels.push_back(to_json(K));
  return json{{"initial", to_json(prior.initial)}, {"kernels", std::move(kernels)}};
}

Vector vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) bad(what, "expected a nonempty array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) bad(what, "entry " + std::to_string(i) + " is not a number");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Matrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) bad(what, "expected a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) bad(what, "first row is empty or not an array");
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad(what, "ragged rows");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_number())
        bad(what, "entry (" + std::to_string(i) + "," + std::to_string(k) +
                      ") is not a number");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          j[i][k].get<double>();
    }
  }
  return m;
}

CVector cvector_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) bad(what, "expected a nonempty array");
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], what);
  return v;
}

CMatrix cmatrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) bad(what, "expected a nonempty array of rows");
  if (!j[0].is_array() || j[0].empty()) bad(what, "first row is empty or not an array");
  const std::size_t cols = j[0].size();
  CMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad(what, "ragged rows");
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(j[i][k], what);
  }
  return m;
}

KrausMap kraus_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) bad(what, "expected a nonempty array of matrices");
  std::vector<CMatrix> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(cmatrix_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  return KrausMap(std::move(coeffs));
}

MarkovPrior prior_from_json(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("initial") || !j.contains("kernels"))
    bad(what, "expected an object with \"initial\" and \"kernels\"");
  MarkovPrior prior;
  prior.initial = vector_from_json(j["initial"], what + ".initial");
  const json& kernels = j["kernels"];
  if (!kernels.is_array() || kernels.empty()) bad(what, "\"kernels\" must be nonempty");
  for (std::size_t t = 0; t < kernels.size(); ++t)
    prior.kernels.push_back(
        matrix_from_json(kernels[t], what + ".kernels[" + std::to_string(t) + "]"));
  return prior;
}

SolveReport report_from_json(const json& j) {
  SolveReport report;
  report.iterations = j.at("iterations").get<int>();
  report.converged = j.at("converged").get<bool>();
  report.final_residual = decode_double(j.at("final_residual"));
  report.contraction_bound = decode_double(j.at("contraction_bound"));
  for (const json& r : j.at("residual_trace")) report.residual_trace.push_back(decode_double(r));
  return report;
}

ResidualTable residuals_from_json(const json& j) {
  ResidualTable table;
  for (const json& r : j)
    table.push_back({r.at("name").get<std::string>(), decode_double(r.at("value")),
                     r.at("tolerance").get<double>()});
  return table;
}

SchrodingerPotentials schrodinger_potentials_from_json(const json& j) {
  SchrodingerPotentials p;
  p.phi0 = vector_from_json(j.at("phi0"), "potentials.phi0");
  p.phiT = vector_from_json(j.at("phiT"), "potentials.phiT");
  p.phihat0 = vector_from_json(j.at("phihat0"), "potentials.phihat0");
  p.phihatT = vector_from_json(j.at("phihatT"), "potentials.phihatT");
  return p;
}

QuantumPotentials quantum_potentials_from_json(const json& j) {
  QuantumPotentials p;
  p.phi0 = cmatrix_from_json(j.at("phi0"), "potentials.phi0");
  p.phiT = cmatrix_from_json(j.at("phiT"), "potentials.phiT");
  p.phihat0 = cmatrix_from_json(j.at("phihat0"), "potentials.phihat0");
  p.phihatT = cmatrix_from_json(j.at("phihatT"), "potentials.phihatT");
  return p;
}

std::string gauge_name(Gauge gauge) {
  return gauge == Gauge::Hermitian ? "hermitian" : "triangular";
}

Gauge gauge_from_name(const std::string& name) {
  if (name == "hermitian") return Gauge::Hermitian;
  if (name == "triangular") return Gauge::Triangular;
  throw InvalidInput("unknown gauge \"" + name + "\" (expected hermitian|triangular)");
}

json solver_to_json(const SolveOptions& options) {
  return json{{"tol", options.tol},
              {"max_iter", options.max_iter},
              {"seed", options.seed},
              {"diameter_samples", options.diameter_samples},
              {"gauge", gauge_name(options.gauge)},
              {"override_positivity_check", options.override_positivity_check}};
}

namespace {

ResidualTable recompute_residuals(const json& bundle) {
  const std::string kind = bundle.at("kind").get<std::string>();
  const json& in = bundle.at("inputs");
  const json& out = bundle.at("outputs");

  if (kind == "classical-one-step" || kind == "classical-sinkhorn" ||
      kind == "classical-multi-step") {
    Matrix kernel;
    Vector p0, pT;
    ResidualTable extra;
    if (kind == "classical-multi-step") {
      const MarkovPrior prior = prior_from_json(in.at("prior"), "inputs.prior");
      kernel = prior.kernels[0];
      for (std::size_t t = 1; t < prior.kernels.size(); ++t)
        kernel = kernel * prior.kernels[t];
      p0 = vector_from_json(in.at("p0"), "inputs.p0");
      pT = vector_from_json(in.at("pT"), "inputs.pT");

      std::vector<Vector> marginals;
      for (const json& m : out.at("marginals"))
        marginals.push_back(vector_from_json(m, "outputs.marginals"));
      double stochastic_err = 0.0;
      for (const json& kj : out.at("step_kernels")) {
        const Matrix K = matrix_from_json(kj, "outputs.step_kernels");
        stochastic_err = std::max(
            stochastic_err,
            (K.rowwise().sum() - Vector::Ones(K.rows())).cwiseAbs().maxCoeff());
      }
      extra.push_back({"endpoint_marginal_0",
                       (marginals.front() - p0).cwiseAbs().maxCoeff(), 1e-9});
      extra.push_back({"endpoint_marginal_T",
                       (marginals.back() - pT).cwiseAbs().maxCoeff(), 1e-9});
      extra.push_back({"step_kernels_stochastic", stochastic_err, 1e-10});
    } else if (kind == "classical-sinkhorn") {
      kernel = matrix_from_json(in.at("kernel"), "inputs.kernel");
      const Eigen::Index n = kernel.rows();
      p0 = Vector::Constant(n, 1.0 / double(n));
      pT = p0;
      const Matrix ds = matrix_from_json(out.at("doubly_stochastic"),
                                         "outputs.doubly_stochastic");
      const double tol = bundle.at("solver").at("tol").get<double>();
      const double sum_tol = std::max(10.0 * tol, 1e-12);
      extra.push_back({"output_row_sums",
                       (ds.rowwise().sum() - Vector::Ones(n)).cwiseAbs().maxCoeff(),
                       sum_tol});
      extra.push_back({"output_col_sums",
                       (ds.colwise().sum() - Eigen::RowVectorXd::Ones(n))
                           .cwiseAbs()
                           .maxCoeff(),
                       sum_tol});
    } else {
      kernel = matrix_from_json(in.at("kernel"), "inputs.kernel");
      p0 = vector_from_json(in.at("p0"), "inputs.p0");
      pT = vector_from_json(in.at("pT"), "inputs.pT");
    }
    const SchrodingerPotentials potentials =
        schrodinger_potentials_from_json(out.at("potentials"));
    const Matrix joint = matrix_from_json(out.at("joint"), "outputs.joint");
    ResidualTable table = classical_residuals(kernel, p0, pT, potentials, joint);
    table.insert(table.end(), extra.begin(), extra.end());
    return table;
  }

  const Gauge gauge = gauge_from_name(bundle.at("solver").at("gauge").get<std::string>());
  if (kind == "quantum-doubly-stochastic") {
    const KrausMap map = kraus_from_json(in.at("channel"), "inputs.channel");
    const QuantumPotentials potentials =
        quantum_potentials_from_json(out.at("potentials"));
    const KrausMap transformed =
        kraus_from_json(out.at("transformed"), "outputs.transformed");
    return doubly_stochastic_residuals(map, potentials, transformed);
  }
  if (kind == "quantum-bridge") {
    const KrausMap map = kraus_from_json(in.at("channel"), "inputs.channel");
    const CMatrix rho0 = cmatrix_from_json(in.at("rho0"), "inputs.rho0");
    const CMatrix rhoT = cmatrix_from_json(in.at("rhoT"), "inputs.rhoT");
    const QuantumPotentials potentials =
        quantum_potentials_from_json(out.at("potentials"));
    const KrausMap transformed =
        kraus_from_json(out.at("transformed"), "outputs.transformed");
    return quantum_bridge_residuals(map, rho0, rhoT, potentials, transformed, gauge);
  }
  if (kind == "quantum-pure") {
    const KrausMap map = kraus_from_json(in.at("channel"), "inputs.channel");
    const CVector v0 = cvector_from_json(in.at("v0"), "inputs.v0");
    const CVector vT = cvector_from_json(in.at("vT"), "inputs.vT");
    const QuantumPotentials potentials =
        quantum_potentials_from_json(out.at("potentials"));
    const KrausMap transformed =
        kraus_from_json(out.at("transformed"), "outputs.transformed");
    return pure_state_residuals(map, v0, vT, potentials, transformed);
  }
  if (kind == "quantum-multi-step") {
    std::vector<KrausMap> steps;
    for (const json& c : in.at("channels"))
      steps.push_back(kraus_from_json(c, "inputs.channels"));
    const int max_coeffs = bundle.at("solver").value("max_coeffs", 4096);
    const KrausMap composed = compose(std::span<const KrausMap>(steps), max_coeffs);
    const CMatrix rho0 = cmatrix_from_json(in.at("rho0"), "inputs.rho0");
    const CMatrix rhoT = cmatrix_from_json(in.at("rhoT"), "inputs.rhoT");
    const QuantumPotentials potentials =
        quantum_potentials_from_json(out.at("potentials"));
    const KrausMap transformed =
        kraus_from_json(out.at("transformed"), "outputs.transformed");
    std::vector<KrausMap> step_maps;
    for (const json& c : out.at("step_maps"))
      step_maps.push_back(kraus_from_json(c, "outputs.step_maps"));
    std::vector<CMatrix> densities;
    for (const json& d : out.at("intermediate_densities"))
      densities.push_back(cmatrix_from_json(d, "outputs.intermediate_densities"));
    ResidualTable table =
        quantum_bridge_residuals(composed, rho0, rhoT, potentials, transformed, gauge);
    const ResidualTable extra =
        multistep_step_residuals(rho0, rhoT, step_maps, densities);
    table.insert(table.end(), extra.begin(), extra.end());
    return table;
  }
  throw InvalidInput("verify: unknown bundle kind \"" + kind + "\"");
}

}  // namespace

VerifyOutcome verify_bundle(const json& bundle) {
  const ResidualTable stored = residuals_from_json(bundle.at("verification"));
  VerifyOutcome outcome;
  outcome.recomputed = recompute_residuals(bundle);
  if (outcome.recomputed.size() != stored.size())
    throw InvalidInput("verify: stored table has " + std::to_string(stored.size()) +
                       " entries, recomputed has " +
                       std::to_string(outcome.recomputed.size()));
  outcome.matches_stored = true;
  outcome.within_tolerance = true;
  for (std::size_t i = 0; i < stored.size(); ++i) {
    const auto& s = stored[i];
    const auto& r = outcome.recomputed[i];
    if (s.name != r.name)
      throw InvalidInput("verify: residual name mismatch at entry " + std::to_string(i));
    if (!(std::abs(s.value - r.value) <= 1e-12)) {
      outcome.matches_stored = false;
      if (outcome.detail.empty())
        outcome.detail = r.name + ": stored value does not match recomputation";
    }
    if (!(r.value < r.tolerance)) {
      outcome.within_tolerance = false;
      if (outcome.detail.empty()) outcome.detail = r.name + ": above tolerance";
    }
  }
  return outcome;
}

std::string format_summary(const json& bundle, bool include_trace) {
  std::ostringstream os;
  const SolveReport report = report_from_json(bundle.at("report"));
  const ResidualTable table = residuals_from_json(bundle.at("verification"));

  os << "bridgekit " << bundle.at("kind").get<std::string>() << "\n";
  os << "converged: " << (report.converged ? "yes" : "NO") << " ("
     << report.iterations << " iterations, final residual "
     << report.final_residual << ")\n";
  os << "contraction bound: " << report.contraction_bound << "\n";
  os << "verification residuals:\n";
  for (const auto& r : table) {
    os << "  " << r.name;
    for (std::size_t pad = r.name.size(); pad < 34; ++pad) os << ' ';
    os << r.value << "  (tolerance " << r.tolerance << ")  "
       << (r.value < r.tolerance ? "ok" : "FAIL") << "\n";
  }
  os << "status: "
     << (report.converged && all_within_tolerance(table) ? "VERIFIED"
                                                         : "NOT VERIFIED")
     << "\n";
  if (include_trace && !report.residual_trace.empty()) {
    os << "trace:\n";
    for (std::size_t k = 0; k < report.residual_trace.size(); ++k)
      os << "  " << (k + 1) << "  " << report.residual_trace[k] << "\n";
  }
  return os.str();
}

}  // namespace bridgekit::io
