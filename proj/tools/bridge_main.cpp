// bridge — command-line front end: loads kernels, marginals and Kraus maps
// from JSON files, runs the bridge solvers and emits a machine-readable
// result bundle plus a plain-text summary.
//
// Exit codes: 0 converged and verified, 1 input/validation error,
// 2 non-convergence or verification failure (bundle still emitted).

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "bridgekit/io.hpp"

namespace {

using bridgekit::io::json;

enum class LogLevel { Quiet = 0, Info = 1, Trace = 2 };

LogLevel log_level() {
  const char* env = std::getenv("BRIDGEKIT_LOG");
  if (env == nullptr) return LogLevel::Info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "trace") return LogLevel::Trace;
  return LogLevel::Info;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bridgekit::InvalidInput("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw bridgekit::InvalidInput("\"" + path + "\": " + e.what());
  }
}

struct CommonArgs {
  double tol = 1e-12;
  int max_iter = 0;
  std::uint64_t seed = 0;
  int diameter_samples = 32;
  std::string gauge = "hermitian";
  bool override_positivity = false;
  std::string output;
};

void add_common_options(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--tol", args->tol, "convergence tolerance (Hilbert metric)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", args->max_iter,
                  "iteration budget; 0 derives it from the contraction rate");
  cmd->add_option("--seed", args->seed, "seed for sampled checks");
  cmd->add_option("--diameter-samples", args->diameter_samples,
                  "samples for the quantum diameter estimate; 0 disables");
  cmd->add_option("--gauge", args->gauge, "factorization gauge")
      ->check(CLI::IsMember({"hermitian", "triangular"}));
  cmd->add_flag("--override-positivity-check", args->override_positivity,
                "run without the strict-positivity guard (no rate guarantee)");
  cmd->add_option("--output,-o", args->output,
                  "write the JSON bundle here (default: stdout)");
}

bridgekit::SolveOptions to_options(const CommonArgs& args) {
  bridgekit::SolveOptions options;
  options.tol = args.tol;
  options.max_iter = args.max_iter;
  options.seed = args.seed;
  options.diameter_samples = args.diameter_samples;
  options.gauge = bridgekit::io::gauge_from_name(args.gauge);
  options.override_positivity_check = args.override_positivity;
  return options;
}

json make_bundle(const std::string& kind, const CommonArgs& args, json inputs,
                 json outputs, const bridgekit::SolveReport& report,
                 const bridgekit::ResidualTable& verification) {
  return json{{"format", "bridgekit-bundle"},
              {"version", 1},
              {"kind", kind},
              {"precision", 17},
              {"solver", bridgekit::io::solver_to_json(to_options(args))},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"report", bridgekit::io::to_json(report)},
              {"verification", bridgekit::io::to_json(verification)}};
}

int emit(const json& bundle, const CommonArgs& args, bool ok) {
  const std::string text = bundle.dump(2) + "\n";
  if (args.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.output);
    if (!out) throw bridgekit::InvalidInput("cannot write \"" + args.output + "\"");
    out << text;
  }
  const LogLevel level = log_level();
  if (level != LogLevel::Quiet)
    std::cerr << bridgekit::io::format_summary(bundle, level == LogLevel::Trace);
  return ok ? 0 : 2;
}

// ---------------------------------------------------------------------------
// classical subcommands

int run_classical_one_step(const std::string& kernel_path, const std::string& p0_path,
                           const std::string& pT_path, const CommonArgs& args) {
  using namespace bridgekit;
  const Matrix kernel = io::matrix_from_json(load_json(kernel_path), "kernel");
  const Vector p0 = io::vector_from_json(load_json(p0_path), "p0");
  const Vector pT = io::vector_from_json(load_json(pT_path), "pT");
  validate_stochastic_matrix(kernel, "kernel");

  auto [potentials, report] = solve_one_step(kernel, p0, pT, to_options(args));
  const Matrix joint = one_step_joint(potentials, kernel);
  const Matrix transition = one_step_transition(kernel, potentials);
  const ResidualTable table = classical_residuals(kernel, p0, pT, potentials, joint);

  const json bundle = make_bundle(
      "classical-one-step", args,
      json{{"kernel", io::to_json(kernel)}, {"p0", io::to_json(p0)}, {"pT", io::to_json(pT)}},
      json{{"potentials", io::to_json(potentials)},
           {"joint", io::to_json(joint)},
           {"transition", io::to_json(transition)}},
      report, table);
  return emit(bundle, args, report.converged && all_within_tolerance(table));
}

int run_classical_multi_step(const std::string& prior_path, const std::string& p0_path,
                             const std::string& pT_path, const CommonArgs& args) {
  using namespace bridgekit;
  const MarkovPrior prior = io::prior_from_json(load_json(prior_path), "prior");
  const Vector p0 = io::vector_from_json(load_json(p0_path), "p0");
  const Vector pT = io::vector_from_json(load_json(pT_path), "pT");
  validate_probability_vector(prior.initial, "prior.initial");

  const BridgeSolution solution = solve_bridge(prior, p0, pT, to_options(args));

  Matrix product = prior.kernels[0];
  for (std::size_t t = 1; t < prior.kernels.size(); ++t) product = product * prior.kernels[t];
  ResidualTable table =
      classical_residuals(product, p0, pT, solution.potentials, solution.joint);
  double stochastic_err = 0.0;
  for (const Matrix& K : solution.step_kernels)
    stochastic_err = std::max(
        stochastic_err, (K.rowwise().sum() - Vector::Ones(K.rows())).cwiseAbs().maxCoeff());
  table.push_back({"endpoint_marginal_0",
                   (solution.marginals.front() - p0).cwiseAbs().maxCoeff(), 1e-9});
  table.push_back({"endpoint_marginal_T",
                   (solution.marginals.back() - pT).cwiseAbs().maxCoeff(), 1e-9});
  table.push_back({"step_kernels_stochastic", stochastic_err, 1e-10});

  json step_kernels = json::array();
  for (const Matrix& K : solution.step_kernels) step_kernels.push_back(io::to_json(K));
  json marginals = json::array();
  for (const Vector& m : solution.marginals) marginals.push_back(io::to_json(m));
  json phi = json::array(), phihat = json::array();
  for (const Vector& v : solution.harmonics.phi) phi.push_back(io::to_json(v));
  for (const Vector& v : solution.harmonics.phihat) phihat.push_back(io::to_json(v));

  const json bundle = make_bundle(
      "classical-multi-step", args,
      json{{"prior", io::to_json(prior)}, {"p0", io::to_json(p0)}, {"pT", io::to_json(pT)}},
      json{{"potentials", io::to_json(solution.potentials)},
           {"joint", io::to_json(solution.joint)},
           {"step_kernels", std::move(step_kernels)},
           {"marginals", std::move(marginals)},
           {"harmonics", json{{"phi", std::move(phi)}, {"phihat", std::move(phihat)}}}},
      solution.report, table);
  return emit(bundle, args,
              solution.report.converged && all_within_tolerance(table));
}

int run_classical_sinkhorn(const std::string& kernel_path, const CommonArgs& args) {
  using namespace bridgekit;
  const Matrix kernel = io::matrix_from_json(load_json(kernel_path), "kernel");
  validate_stochastic_matrix(kernel, "kernel");

  const SinkhornResult result = sinkhorn_doubly_stochastic(kernel, to_options(args));
  const Eigen::Index n = kernel.rows();
  const Vector uniform = Vector::Constant(n, 1.0 / double(n));
  const Matrix joint = one_step_joint(result.potentials, kernel);

  ResidualTable table = classical_residuals(kernel, uniform, uniform, result.potentials, joint);
  const double sum_tol = std::max(10.0 * args.tol, 1e-12);
  table.push_back({"output_row_sums",
                   (result.doubly_stochastic.rowwise().sum() - Vector::Ones(n))
                       .cwiseAbs()
                       .maxCoeff(),
                   sum_tol});
  table.push_back({"output_col_sums",
                   (result.doubly_stochastic.colwise().sum() - Eigen::RowVectorXd::Ones(n))
                       .cwiseAbs()
                       .maxCoeff(),
                   sum_tol});

  const json bundle = make_bundle(
      "classical-sinkhorn", args, json{{"kernel", io::to_json(kernel)}},
      json{{"potentials", io::to_json(result.potentials)},
           {"joint", io::to_json(joint)},
           {"doubly_stochastic", io::to_json(result.doubly_stochastic)}},
      result.report, table);
  return emit(bundle, args, result.report.converged && all_within_tolerance(table));
}

// ---------------------------------------------------------------------------
// quantum subcommands

int run_quantum_doubly_stochastic(const std::string& channel_path, const CommonArgs& args) {
  using namespace bridgekit;
  const KrausMap map = io::kraus_from_json(load_json(channel_path), "channel");
  const QuantumBridgeResult result = solve_doubly_stochastic(map, to_options(args));
  const json bundle = make_bundle(
      "quantum-doubly-stochastic", args, json{{"channel", io::to_json(map)}},
      json{{"potentials", io::to_json(result.potentials)},
           {"transformed", io::to_json(*result.transformed)}},
      result.report, result.verification);
  return emit(bundle, args, result.report.converged && result.verified());
}

int run_quantum_bridge(const std::string& channel_path, const std::string& rho0_path,
                       const std::string& rhoT_path, const CommonArgs& args) {
  using namespace bridgekit;
  const KrausMap map = io::kraus_from_json(load_json(channel_path), "channel");
  const CMatrix rho0 = io::cmatrix_from_json(load_json(rho0_path), "rho0");
  const CMatrix rhoT = io::cmatrix_from_json(load_json(rhoT_path), "rhoT");
  const QuantumBridgeResult result = solve_general_bridge(map, rho0, rhoT, to_options(args));
  const json bundle = make_bundle(
      "quantum-bridge", args,
      json{{"channel", io::to_json(map)},
           {"rho0", io::to_json(rho0)},
           {"rhoT", io::to_json(rhoT)}},
      json{{"potentials", io::to_json(result.potentials)},
           {"transformed", io::to_json(*result.transformed)}},
      result.report, result.verification);
  return emit(bundle, args, result.report.converged && result.verified());
}

int run_quantum_pure(const std::string& channel_path, const std::string& v0_path,
                     const std::string& vT_path, const CommonArgs& args) {
  using namespace bridgekit;
  const KrausMap map = io::kraus_from_json(load_json(channel_path), "channel");
  const CVector v0 = io::cvector_from_json(load_json(v0_path), "v0");
  const CVector vT = io::cvector_from_json(load_json(vT_path), "vT");
  const QuantumBridgeResult result = pure_state_bridge(map, v0, vT);
  const json bundle = make_bundle(
      "quantum-pure", args,
      json{{"channel", io::to_json(map)},
           {"v0", io::to_json(v0)},
           {"vT", io::to_json(vT)}},
      json{{"potentials", io::to_json(result.potentials)},
           {"transformed", io::to_json(*result.transformed)}},
      result.report, result.verification);
  return emit(bundle, args, result.verified());
}

int run_quantum_multi_step(const std::string& channels_path, const std::string& rho0_path,
                           const std::string& rhoT_path, int max_coeffs,
                           const CommonArgs& args) {
  using namespace bridgekit;
  const json channels_json = load_json(channels_path);
  if (!channels_json.is_array() || channels_json.empty())
    throw InvalidInput("channels: expected a nonempty array of Kraus maps");
  std::vector<KrausMap> steps;
  for (const json& c : channels_json) steps.push_back(io::kraus_from_json(c, "channels"));
  const CMatrix rho0 = io::cmatrix_from_json(load_json(rho0_path), "rho0");
  const CMatrix rhoT = io::cmatrix_from_json(load_json(rhoT_path), "rhoT");

  const QuantumBridgeResult result =
      multistep_bridge(steps, rho0, rhoT, to_options(args), max_coeffs);

  json step_maps = json::array();
  for (const KrausMap& F : result.step_maps) step_maps.push_back(io::to_json(F));
  json densities = json::array();
  for (const CMatrix& rho : result.intermediate_densities)
    densities.push_back(io::to_json(rho));

  json bundle = make_bundle(
      "quantum-multi-step", args,
      json{{"channels", channels_json},
           {"rho0", io::to_json(rho0)},
           {"rhoT", io::to_json(rhoT)}},
      json{{"potentials", io::to_json(result.potentials)},
           {"transformed", io::to_json(*result.transformed)},
           {"step_maps", std::move(step_maps)},
           {"intermediate_densities", std::move(densities)}},
      result.report, result.verification);
  bundle["solver"]["max_coeffs"] = max_coeffs;
  return emit(bundle, args, result.report.converged && result.verified());
}

int run_verify(const std::string& bundle_path) {
  using namespace bridgekit;
  const json bundle = load_json(bundle_path);
  const io::VerifyOutcome outcome = io::verify_bundle(bundle);
  for (const auto& r : outcome.recomputed) {
    std::cout << r.name;
    for (std::size_t pad = r.name.size(); pad < 34; ++pad) std::cout << ' ';
    std::cout << r.value << "  (tolerance " << r.tolerance << ")  "
              << (r.value < r.tolerance ? "ok" : "FAIL") << "\n";
  }
  if (outcome.matches_stored && outcome.within_tolerance) {
    std::cout << "verify: ok\n";
    return 0;
  }
  std::cout << "verify: FAILED — " << outcome.detail << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schrödinger bridge solvers for Markov chains and quantum channels"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string kernel_path, prior_path, p0_path, pT_path;
  std::string channel_path, channels_path, rho0_path, rhoT_path, v0_path, vT_path;
  std::string bundle_path;
  int max_coeffs = 4096;

  auto* one_step = app.add_subcommand(
      "classical-one-step", "solve the one-step Schrödinger system for a kernel");
  one_step->add_option("--kernel", kernel_path, "row-stochastic kernel (JSON matrix)")
      ->required();
  one_step->add_option("--p0", p0_path, "initial marginal (JSON array)")->required();
  one_step->add_option("--pT", pT_path, "final marginal (JSON array)")->required();
  add_common_options(one_step, &args);

  auto* multi_step = app.add_subcommand(
      "classical-multi-step", "solve the bridge for a multi-step Markov prior");
  multi_step->add_option("--prior", prior_path, "prior (JSON: initial + kernels)")
      ->required();
  multi_step->add_option("--p0", p0_path, "initial marginal")->required();
  multi_step->add_option("--pT", pT_path, "final marginal")->required();
  add_common_options(multi_step, &args);

  auto* sinkhorn = app.add_subcommand(
      "classical-sinkhorn", "rescale a positive kernel to doubly stochastic form");
  sinkhorn->add_option("--kernel", kernel_path, "row-stochastic kernel")->required();
  add_common_options(sinkhorn, &args);

  auto* qds = app.add_subcommand(
      "quantum-doubly-stochastic",
      "transform a Kraus map into a doubly stochastic one (uniform marginals)");
  qds->add_option("--channel", channel_path, "Kraus map (JSON array of matrices)")
      ->required();
  add_common_options(qds, &args);

  auto* qbridge = app.add_subcommand(
      "quantum-bridge", "solve the quantum bridge for general PD marginals");
  qbridge->add_option("--channel", channel_path, "Kraus map")->required();
  qbridge->add_option("--rho0", rho0_path, "initial density matrix")->required();
  qbridge->add_option("--rhoT", rhoT_path, "final density matrix")->required();
  add_common_options(qbridge, &args);

  auto* qpure = app.add_subcommand(
      "quantum-pure", "closed-form bridge between two pure states");
  qpure->add_option("--channel", channel_path, "Kraus map")->required();
  qpure->add_option("--v0", v0_path, "initial unit vector")->required();
  qpure->add_option("--vT", vT_path, "final unit vector")->required();
  add_common_options(qpure, &args);

  auto* qmulti = app.add_subcommand(
      "quantum-multi-step", "solve the bridge across a sequence of Kraus maps");
  qmulti->add_option("--channels", channels_path, "JSON array of Kraus maps")->required();
  qmulti->add_option("--rho0", rho0_path, "initial density matrix")->required();
  qmulti->add_option("--rhoT", rhoT_path, "final density matrix")->required();
  qmulti->add_option("--max-coeffs", max_coeffs,
                     "cap on composed Kraus coefficient count");
  add_common_options(qmulti, &args);

  auto* verify = app.add_subcommand(
      "verify", "recompute and check the residual table of an emitted bundle");
  verify->add_option("bundle", bundle_path, "bundle JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (one_step->parsed())
      return run_classical_one_step(kernel_path, p0_path, pT_path, args);
    if (multi_step->parsed())
      return run_classical_multi_step(prior_path, p0_path, pT_path, args);
    if (sinkhorn->parsed()) return run_classical_sinkhorn(kernel_path, args);
    if (qds->parsed()) return run_quantum_doubly_stochastic(channel_path, args);
    if (qbridge->parsed())
      return run_quantum_bridge(channel_path, rho0_path, rhoT_path, args);
    if (qpure->parsed()) return run_quantum_pure(channel_path, v0_path, vT_path, args);
    if (qmulti->parsed())
      return run_quantum_multi_step(channels_path, rho0_path, rhoT_path, max_coeffs, args);
    if (verify->parsed()) return run_verify(bundle_path);
  } catch (const bridgekit::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bridgekit::ConeBoundaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
