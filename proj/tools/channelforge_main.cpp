// Copyright 2026 The ChannelForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "channelforge/channelforge.hpp"

namespace cf = channelforge;

namespace {

// Exit codes are a scripting contract: 0 success, 1 verification or
// validation failure, 2 input error.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

struct ValidationFailure : cf::Error {
  using Error::Error;
};

cf::Vector basis_state(cf::Index i, cf::Index d) {
  cf::Vector v = cf::Vector::Zero(d);
  v(i) = 1.0;
  return v;
}

void require_valid(const cf::ChannelSpec& channel, bool no_validate, double tolerance) {
  if (no_validate) return;
  const cf::ValidationReport report = cf::validate_cptp(channel, tolerance);
  if (!report.passed) {
    std::ostringstream what;
    what << "input channel failed CPTP validation (completeness "
         << report.completeness_residual << ", Choi min eigenvalue "
         << report.choi_min_eigenvalue << ", trace deviation "
         << report.choi_trace_deviation << "); pass --no-validate to override";
    throw ValidationFailure(what.str());
  }
}

std::vector<double> parse_times(const std::string& csv) {
  std::vector<double> times;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) times.push_back(std::stod(item));
  if (times.empty()) throw cf::ParseError("--times needs a comma-separated list");
  return times;
}

int cmd_convert(const std::string& in, const std::string& to, const std::string& out,
                double threshold, bool no_validate) {
  const cf::ChannelSpec channel = cf::io::read_channel(in);
  require_valid(channel, no_validate, cf::tol::kChannel);
  cf::io::write_channel(out, cf::convert(channel, cf::repr_from_name(to), threshold));
  return kOk;
}

int cmd_validate(const std::string& in, const std::string& out, double tolerance) {
  const cf::ChannelSpec channel = cf::io::read_channel(in);
  const cf::ValidationReport report = cf::validate_cptp(channel, tolerance);
  const std::string text = cf::io::validation_to_json(report);
  if (out.empty())
    std::cout << text << "\n";
  else
    cf::io::write_text(out, text);
  return report.passed ? kOk : kVerificationFailure;
}

int cmd_synthesize(const std::string& in, const std::string& out,
                   const std::string& report_path, double threshold, bool no_validate) {
  const cf::ChannelSpec channel = cf::io::read_channel(in);
  require_valid(channel, no_validate, cf::tol::kChannel);
  const cf::KrausSet minimal =
      cf::minimal_kraus(cf::as_kraus(channel, threshold), threshold);
  const cf::AdaptiveCircuit circuit = cf::synthesize(minimal);
  const cf::VerificationReport report = cf::verify_circuit(circuit, minimal);
  cf::io::write_circuit(out, circuit);
  const std::string text = cf::io::verification_to_json(report);
  if (report_path.empty())
    std::cout << text << "\n";
  else
    cf::io::write_text(report_path, text);
  return report.passed ? kOk : kVerificationFailure;
}

int cmd_decompose(const std::string& in, const std::string& out) {
  const cf::AdaptiveCircuit circuit = cf::io::read_circuit(in);
  cf::io::write_text(out, cf::io::cqed_to_json(cf::decompose_circuit(circuit)));
  return kOk;
}

int cmd_simulate(const std::string& circuit_path, const std::string& state_path,
                 const std::string& mode, const std::string& out, cf::Index trajectories,
                 std::uint64_t seed, cf::Index keep_bits, const std::string& target_path,
                 const std::string& summary_path) {
  const cf::AdaptiveCircuit circuit = cf::io::read_circuit(circuit_path);
  const cf::DensityMatrix rho = cf::io::read_state(state_path);

  if (mode == "exact") {
    cf::io::write_state(out, cf::apply_channel_exact(circuit, rho));
    return kOk;
  }
  if (mode == "trajectory") {
    std::optional<cf::Vector> target;
    if (!target_path.empty()) {
      // Fidelity target: the dominant eigenvector of the given state.
      const cf::DensityMatrix target_state = cf::io::read_state(target_path);
      target = cf::hermitian_eigs(target_state.rho).vectors.col(0);
    }
    std::ostringstream log;
    for (cf::Index i = 0; i < trajectories; ++i) {
      const cf::TrajectoryRecord record =
          cf::run_trajectory(circuit, rho, cf::RngSeed{seed}, static_cast<std::uint64_t>(i));
      std::optional<double> fidelity;
      if (target) fidelity = cf::state_fidelity(*target, record.final_state.rho);
      log << cf::io::trajectory_line(record, fidelity) << "\n";
    }
    cf::io::write_text(out, log.str());
    if (!summary_path.empty()) {
      const cf::MonteCarloResult mc =
          cf::monte_carlo(circuit, rho, trajectories, cf::RngSeed{seed});
      const cf::DensityMatrix exact = cf::apply_channel_exact(circuit, rho);
      cf::io::write_text(summary_path,
                         cf::io::monte_carlo_summary_json(
                             mc, cf::RngSeed{seed},
                             cf::trace_distance(mc.average.rho, exact.rho)));
    }
    return kOk;
  }
  if (mode == "instrument") {
    cf::io::write_text(
        out, cf::io::instrument_to_json(cf::run_instrument(circuit, rho, keep_bits)));
    return kOk;
  }
  if (mode == "povm") {
    cf::io::write_text(out, cf::io::povm_to_json(cf::run_povm(circuit, rho, keep_bits)));
    return kOk;
  }
  throw cf::ParseError("unknown mode: " + mode +
                       " (expected exact|trajectory|instrument|povm)");
}

// ---------------------------------------------------------------------------
// Worked-example bundles
// ---------------------------------------------------------------------------

struct ExampleParams {
  std::string outdir;
  double alpha = 0.0;  // 0: per-example default
  int n_c = 0;         // 0: per-example default
  double kappa = 1.0;
  std::string times;  // comma separated; empty: default grid
  std::uint64_t seed = 1;
  cf::Index trajectories = 100;
  cf::Index dim = 3;
};

std::filesystem::path ensure_outdir(const std::string& outdir) {
  const std::filesystem::path dir(outdir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Per-path snapshot (labels, probabilities, final states) of a circuit run.
std::vector<cf::TrajectoryRecord> path_snapshots(const cf::AdaptiveCircuit& circuit,
                                                 const cf::DensityMatrix& rho) {
  std::vector<cf::TrajectoryRecord> records;
  const cf::InstrumentOutput paths = cf::run_instrument(circuit, rho, circuit.depth);
  for (const cf::InstrumentOutcome& outcome : paths.outcomes) {
    if (outcome.probability < cf::tol::kProbabilityFloor) continue;
    cf::TrajectoryRecord record;
    record.outcome_bits = outcome.label;
    record.probability = outcome.probability;
    record.final_state = outcome.state;
    records.push_back(std::move(record));
  }
  return records;
}

void emit_trajectory_bundle(const std::filesystem::path& dir, const std::string& name,
                            const cf::AdaptiveCircuit& circuit, const cf::DensityMatrix& rho,
                            cf::Index trajectories, std::uint64_t seed) {
  // Fidelity target: the dominant eigenvector of the exact output.
  const cf::DensityMatrix exact = cf::apply_channel_exact(circuit, rho);
  const cf::Vector target = cf::hermitian_eigs(exact.rho).vectors.col(0);

  std::ostringstream log;
  for (cf::Index i = 0; i < trajectories; ++i) {
    const cf::TrajectoryRecord record =
        cf::run_trajectory(circuit, rho, cf::RngSeed{seed}, static_cast<std::uint64_t>(i));
    log << cf::io::trajectory_line(record,
                                   cf::state_fidelity(target, record.final_state.rho))
        << "\n";
  }
  cf::io::write_text((dir / (name + "_trajectories.jsonl")).string(), log.str());
  cf::io::write_text((dir / (name + "_path_states.csv")).string(),
                     cf::io::path_states_csv(path_snapshots(circuit, rho)));

  const cf::MonteCarloResult mc =
      cf::monte_carlo(circuit, rho, trajectories, cf::RngSeed{seed});
  cf::io::write_text(
      (dir / (name + "_ensemble.json")).string(),
      cf::io::monte_carlo_summary_json(mc, cf::RngSeed{seed},
                                       cf::trace_distance(mc.average.rho, exact.rho)));
}

int example_cat(const ExampleParams& params, int components) {
  const std::filesystem::path dir = ensure_outdir(params.outdir);
  const double alpha = params.alpha > 0.0 ? params.alpha : (components == 2 ? 1.1 : 2.5);
  const int n_c = params.n_c > 0 ? params.n_c : (components == 2 ? 14 : 20);

  cf::CatCodeSpec spec;
  spec.kappa = params.kappa;
  spec.n_c = n_c;
  for (int k = 0; k < components; ++k) {
    const double phase = 2.0 * M_PI * k / components;
    spec.alphas.push_back(alpha * cf::Complex(std::cos(phase), std::sin(phase)));
  }
  if (!spec.truncation_ok())
    std::cerr << "warning: truncation heuristic |alpha|^2 + 4|alpha| <= n_c violated\n";

  const cf::SuperOperator generator = cf::lindblad_superop(cf::cat_lindblad(spec));
  // Truncated dark sectors drift slowly, flooring the doubling residual
  // around the squared coherent-tail amplitude. The quartic four-component
  // jump has much fatter tails at desk truncations, hence the looser floor.
  const double relax_tolerance = components == 2 ? 1e-7 : 1e-5;
  const cf::SteadyChannelResult steady = cf::steady_channel(generator, relax_tolerance);
  const cf::KrausSet& kraus = std::get<cf::KrausSet>(steady.channel.repr);
  cf::io::write_channel((dir / "channel.json").string(), steady.channel);

  // Magnitudes below the relaxation residual are truncation junk; build the
  // circuit from the resolvable operators.
  const cf::KrausSet clean = cf::renormalize_trace_preserving(
      cf::choi_to_kraus(cf::as_choi(steady.channel), 10.0 * relax_tolerance));
  const cf::AdaptiveCircuit circuit = cf::synthesize(clean);
  cf::io::write_circuit((dir / "circuit.json").string(), circuit);
  // Verification bars scale with the truncation quality: the quartic jump at
  // desk-scale n_c leaves junk operators whose branch sums are conditioned
  // like 1/lambda_min. The report carries the measured residuals either way.
  const cf::VerificationReport verification =
      components == 2 ? cf::verify_circuit(circuit, clean)
                      : cf::verify_circuit(circuit, clean, 1e-6, 1e-6);
  cf::io::write_text((dir / "report.json").string(),
                     cf::io::verification_to_json(verification));

  const std::vector<double> times =
      params.times.empty()
          ? std::vector<double>{0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 1000.0}
          : parse_times(params.times);
  cf::io::write_text((dir / "rank_vs_time.csv").string(),
                     cf::io::rank_table_csv(cf::rank_vs_time(spec, times)));

  const cf::Index d = spec.dim();
  std::vector<std::pair<std::string, cf::Vector>> starts;
  starts.emplace_back("fock0", basis_state(0, d));
  if (components == 4) {
    starts.emplace_back("fock2", basis_state(2, d));
    starts.emplace_back("fock0_plus_fock2",
                        (basis_state(0, d) + basis_state(2, d)) / std::sqrt(2.0));
    starts.emplace_back("coherent", cf::coherent_state(cf::Complex(2.3), d));
  }
  for (const auto& [name, psi] : starts)
    emit_trajectory_bundle(dir, name, circuit, cf::DensityMatrix::pure(psi),
                           params.trajectories, params.seed);

  // Headline numbers: fidelity of the pumped vacuum to the target cat state.
  const cf::Vector cat = cf::cat_state(spec.alphas, d);
  const cf::DensityMatrix pumped =
      cf::apply_channel_exact(circuit, cf::DensityMatrix::pure(basis_state(0, d)));
  std::ostringstream summary;
  summary.precision(17);
  summary << "{\n  \"components\": " << components << ",\n  \"alpha\": " << alpha
          << ",\n  \"n_c\": " << n_c << ",\n  \"steady_time\": " << steady.time
          << ",\n  \"steady_residual\": " << steady.residual
          << ",\n  \"doublings\": " << steady.doublings
          << ",\n  \"kraus_rank\": " << kraus.count()
          << ",\n  \"circuit_depth\": " << circuit.depth
          << ",\n  \"vacuum_to_cat_fidelity\": "
          << cf::state_fidelity(cat, pumped.rho) << "\n}\n";
  cf::io::write_text((dir / "summary.json").string(), summary.str());
  return verification.passed ? kOk : kVerificationFailure;
}

int example_binomial(const ExampleParams& params) {
  const std::filesystem::path dir = ensure_outdir(params.outdir);
  const cf::BinomialCodeSpec spec{params.n_c > 0 ? params.n_c : 12};
  const cf::Index d = spec.dim();

  const cf::AdaptiveCircuit circuit = cf::binomial_recovery_circuit(spec);
  cf::io::write_circuit((dir / "circuit.json").string(), circuit);
  cf::io::write_text((dir / "cqed.json").string(),
                     cf::io::cqed_to_json(cf::decompose_circuit(circuit)));
  cf::io::write_channel(
      (dir / "channel.json").string(),
      cf::ChannelSpec::from_kraus(cf::minimal_kraus(cf::circuit_kraus(circuit)),
                                  "binomial code recovery"));

  const cf::Matrix errors[4] = {cf::Matrix::Identity(d, d), cf::annihilation(d),
                                cf::annihilation(d) * cf::annihilation(d),
                                cf::number_operator(d)};
  const char* names[4] = {"identity", "one_loss", "two_loss", "dephasing"};
  const cf::Vector up = cf::binomial_codeword_up(spec);
  const cf::Vector down = cf::binomial_codeword_down(spec);

  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::ostringstream table;
  table << "error,min_fidelity,mean_fidelity\n";
  double worst = 1.0;
  for (int e = 0; e < 4; ++e) {
    double min_fidelity = 1.0;
    double sum = 0.0;
    const int trials = 20;
    for (int trial = 0; trial < trials; ++trial) {
      cf::Vector psi = cf::Complex(normal(rng), normal(rng)) * up +
                       cf::Complex(normal(rng), normal(rng)) * down;
      psi /= psi.norm();
      cf::Vector corrupted = errors[e] * psi;
      corrupted /= corrupted.norm();
      const cf::DensityMatrix recovered =
          cf::apply_channel_exact(circuit, cf::DensityMatrix::pure(corrupted));
      const double fidelity = cf::state_fidelity(psi, recovered.rho);
      min_fidelity = std::min(min_fidelity, fidelity);
      sum += fidelity;
    }
    worst = std::min(worst, min_fidelity);
    table << names[e] << ',' << min_fidelity << ',' << sum / trials << "\n";
  }
  cf::io::write_text((dir / "fidelity_table.csv").string(), table.str());

  // Syndrome demonstration: one photon loss on the upper codeword.
  cf::Vector lost = cf::annihilation(d) * up;
  lost /= lost.norm();
  cf::io::write_text((dir / "instrument_one_loss.json").string(),
                     cf::io::instrument_to_json(
                         cf::run_instrument(circuit, cf::DensityMatrix::pure(lost), 2)));
  return worst >= 1.0 - 1e-8 ? kOk : kVerificationFailure;
}

int example_corner(const ExampleParams& params) {
  const std::filesystem::path dir = ensure_outdir(params.outdir);
  const cf::ChannelSpec channel = cf::corner_transpose_channel(3);
  cf::io::write_channel((dir / "channel.json").string(), channel);

  const cf::KrausSet minimal = cf::as_kraus(channel);
  const cf::AdaptiveCircuit synthesized = cf::synthesize(minimal);
  cf::io::write_circuit((dir / "synthesized_circuit.json").string(), synthesized);
  const cf::VerificationReport synth_report = cf::verify_circuit(synthesized, minimal);
  cf::io::write_text((dir / "synthesized_report.json").string(),
                     cf::io::verification_to_json(synth_report));

  const cf::AdaptiveCircuit reference = cf::corner_transpose_reference_circuit();
  cf::io::write_circuit((dir / "reference_circuit.json").string(), reference);
  const cf::VerificationReport ref_report =
      cf::verify_circuit(reference, minimal, 1e-10, 1e-8);
  cf::io::write_text((dir / "reference_report.json").string(),
                     cf::io::verification_to_json(ref_report));

  const cf::Complex det = cf::channel_determinant(cf::as_superop(channel));
  std::ostringstream summary;
  summary.precision(17);
  summary << "{\n  \"determinant\": [" << det.real() << ", " << det.imag()
          << "],\n  \"kraus_rank\": " << minimal.count()
          << ",\n  \"synthesized_depth\": " << synthesized.depth
          << ",\n  \"reference_passed\": " << (ref_report.passed ? "true" : "false")
          << ",\n  \"synthesized_passed\": " << (synth_report.passed ? "true" : "false")
          << "\n}\n";
  cf::io::write_text((dir / "summary.json").string(), summary.str());
  return synth_report.passed && ref_report.passed ? kOk : kVerificationFailure;
}

int example_init(const ExampleParams& params) {
  const std::filesystem::path dir = ensure_outdir(params.outdir);
  const cf::Index d = params.dim;

  // Deterministic random mixed target from the seed.
  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  cf::Matrix g(d, d);
  for (cf::Index i = 0; i < d; ++i)
    for (cf::Index j = 0; j < d; ++j) g(i, j) = cf::Complex(normal(rng), normal(rng));
  cf::Matrix sigma = g * g.adjoint();
  sigma /= sigma.trace();
  const cf::DensityMatrix target(d, sigma);
  cf::io::write_state((dir / "target.json").string(), target);

  const cf::KrausSet kraus = cf::init_channel(cf::StabilizationTarget{target});
  cf::io::write_channel((dir / "channel.json").string(),
                        cf::ChannelSpec::from_kraus(kraus, "state pumping"));
  const cf::AdaptiveCircuit circuit = cf::synthesize(kraus);
  cf::io::write_circuit((dir / "circuit.json").string(), circuit);
  const cf::VerificationReport report = cf::verify_circuit(circuit, kraus);
  cf::io::write_text((dir / "report.json").string(), cf::io::verification_to_json(report));

  // Idempotence and pumping checks.
  const cf::SuperOperator t = cf::kraus_to_superop(kraus);
  const double idempotence =
      (cf::superop_to_choi(cf::SuperOperator(d, t.t * t.t)).m -
       cf::superop_to_choi(t).m)
          .norm();
  const cf::DensityMatrix pumped =
      cf::apply_channel_exact(circuit, cf::DensityMatrix::maximally_mixed(d));
  std::ostringstream summary;
  summary.precision(17);
  summary << "{\n  \"dim\": " << d << ",\n  \"kraus_count\": " << kraus.count()
          << ",\n  \"idempotence_choi_distance\": " << idempotence
          << ",\n  \"pump_distance\": " << cf::trace_distance(pumped.rho, sigma)
          << "\n}\n";
  cf::io::write_text((dir / "summary.json").string(), summary.str());
  return report.passed ? kOk : kVerificationFailure;
}

int cmd_example(const std::string& name, const ExampleParams& params) {
  if (name == "cat2") return example_cat(params, 2);
  if (name == "cat4") return example_cat(params, 4);
  if (name == "binomial") return example_binomial(params);
  if (name == "corner") return example_corner(params);
  if (name == "init") return example_init(params);
  throw cf::ParseError("unknown example: " + name +
                       " (expected cat2|cat4|binomial|corner|init)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-circuit construction and simulation of quantum channels"};
  app.require_subcommand(1);

  std::string in, out, to, report_path, mode, circuit_path, state_path, target_path,
      summary_path;
  double threshold = cf::tol::kRank;
  double tolerance = cf::tol::kChannel;
  bool no_validate = false;
  cf::Index trajectories = 100;
  std::uint64_t seed = 0;
  cf::Index keep_bits = 0;

  CLI::App* convert = app.add_subcommand("convert", "Convert a channel between representations");
  convert->add_option("--in", in, "Input channel JSON")->required();
  convert->add_option("--to", to, "Target representation: kraus|superop|choi")->required();
  convert->add_option("--out", out, "Output channel JSON")->required();
  convert->add_option("--threshold", threshold, "Eigenvalue threshold for Kraus extraction");
  convert->add_flag("--no-validate", no_validate, "Skip CPTP validation of the input");

  CLI::App* validate = app.add_subcommand("validate", "CPTP validation report");
  validate->add_option("--in", in, "Input channel JSON")->required();
  validate->add_option("--out", out, "Report path (stdout when omitted)");
  validate->add_option("--threshold", tolerance, "Validation tolerance");

  CLI::App* synthesize = app.add_subcommand("synthesize", "Compile a channel into an adaptive circuit");
  synthesize->add_option("--in", in, "Input channel JSON")->required();
  synthesize->add_option("--out", out, "Output circuit JSON")->required();
  synthesize->add_option("--report", report_path, "Verification report path (stdout when omitted)");
  synthesize->add_option("--threshold", threshold, "Eigenvalue threshold for minimal Kraus");
  synthesize->add_flag("--no-validate", no_validate, "Skip CPTP validation of the input");

  CLI::App* decompose = app.add_subcommand("decompose", "Factor circuit rounds into V, entangler, W0/W1");
  decompose->add_option("--in", in, "Input circuit JSON")->required();
  decompose->add_option("--out", out, "Output factorized-circuit JSON")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "Run a circuit on a state");
  simulate->add_option("--circuit", circuit_path, "Circuit JSON")->required();
  simulate->add_option("--state", state_path, "Density-matrix JSON")->required();
  simulate->add_option("--mode", mode, "exact|trajectory|instrument|povm")->required();
  simulate->add_option("--out", out, "Output path")->required();
  simulate->add_option("--trajectories", trajectories, "Trajectory count");
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--keep-bits", keep_bits, "Outcome bits kept by instrument/povm");
  simulate->add_option("--target", target_path, "State whose dominant eigenvector is the fidelity target");
  simulate->add_option("--summary", summary_path, "Ensemble summary JSON (trajectory mode)");

  ExampleParams params;
  std::string example_name;
  CLI::App* example = app.add_subcommand("example", "Reproduce a worked example as a file bundle");
  example->add_option("--name", example_name, "cat2|cat4|binomial|corner|init")->required();
  example->add_option("--outdir", params.outdir, "Output directory")->required();
  example->add_option("--alpha", params.alpha, "Coherent amplitude (cat examples)");
  example->add_option("--nc", params.n_c, "Fock truncation");
  example->add_option("--kappa", params.kappa, "Pump rate");
  example->add_option("--times", params.times, "Comma-separated time grid");
  example->add_option("--seed", params.seed, "RNG seed");
  example->add_option("--trajectories", params.trajectories, "Trajectory count");
  example->add_option("--dim", params.dim, "System dimension (init example)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) return cmd_convert(in, to, out, threshold, no_validate);
    if (validate->parsed()) return cmd_validate(in, out, tolerance);
    if (synthesize->parsed())
      return cmd_synthesize(in, out, report_path, threshold, no_validate);
    if (decompose->parsed()) return cmd_decompose(in, out);
    if (simulate->parsed())
      return cmd_simulate(circuit_path, state_path, mode, out, trajectories, seed,
                          keep_bits, target_path, summary_path);
    if (example->parsed()) return cmd_example(example_name, params);
  } catch (const ValidationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
