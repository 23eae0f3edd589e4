// Copyright 2026 The phasent developers
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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "phasent/core.hpp"
#include "phasent/entangler.hpp"
#include "phasent/io.hpp"
#include "phasent/separability.hpp"
#include "phasent/synthesis.hpp"
#include "phasent/transform.hpp"

namespace {

namespace ph = phasent;

// Exit codes: 0 success (analyze: product; sample: no disagreements),
// 1 negative verdict or failed verification, 2 input or usage error.
constexpr int kExitVerdict = 1;
constexpr int kExitInputError = 2;

void check_cli_qubits(int num_qubits) {
  const int max = ph::configured_max_qubits(ph::kCliMaxQubits);
  if (num_qubits > max) {
    throw ph::InvalidSizeError("input uses " + std::to_string(num_qubits) +
                               " qubits; the tool accepts at most " +
                               std::to_string(max) +
                               " (override with ENTANGLER_MAX_QUBITS)");
  }
}

ph::PhaseProfile load_phases(const std::filesystem::path& path) {
  ph::PhaseProfile profile = ph::parse_phases(ph::read_text_file(path));
  check_cli_qubits(profile.num_qubits());
  return profile;
}

ph::StateVector load_state(const std::filesystem::path& path) {
  ph::StateVector state = ph::parse_state(ph::read_text_file(path));
  check_cli_qubits(state.num_qubits());
  return state;
}

void emit_output(const std::string& text, const std::optional<std::string>& out) {
  if (out) {
    ph::write_text_file_atomic(*out, text);
  } else {
    std::cout << text;
  }
}

struct SynthesizeArgs {
  std::string phases_path;
  std::optional<std::string> out_path;
};

int run_synthesize(const SynthesizeArgs& args) {
  const ph::PhaseProfile profile = load_phases(args.phases_path);
  emit_output(ph::emit_circuit(ph::decompose(profile)), args.out_path);
  return 0;
}

struct VerifyArgs {
  std::string phases_path;
  std::optional<std::string> circuit_path;
  std::optional<std::string> out_path;
  double tol = 1e-12;
};

int run_verify(const VerifyArgs& args) {
  const ph::PhaseProfile profile = load_phases(args.phases_path);
  const ph::CircuitDescription circuit =
      args.circuit_path ? ph::parse_circuit(ph::read_text_file(*args.circuit_path))
                        : ph::decompose(profile);

  const ph::SelectivePhaseKernel kernel = ph::make_selective_kernel(profile, false);
  const ph::DenseMatrix kernel_dense = kernel.dense();
  const double reconstruction_error =
      ph::max_abs_diff(ph::compose_circuit(circuit), kernel_dense);
  const bool kernel_unitary = ph::is_unitary(kernel_dense, args.tol);
  bool blocks_unitary = true;
  for (const ph::ControlledPhaseBlock& block : circuit.blocks) {
    blocks_unitary = blocks_unitary && ph::block_is_unitary(block, args.tol);
  }

  const nlohmann::json report = {{"reconstruction_error", reconstruction_error},
                                 {"kernel_unitary", kernel_unitary},
                                 {"blocks_unitary", blocks_unitary}};
  emit_output(report.dump(2) + "\n", args.out_path);
  const bool ok = reconstruction_error <= args.tol && kernel_unitary && blocks_unitary;
  return ok ? 0 : kExitVerdict;
}

struct AnalyzeArgs {
  std::optional<std::string> state_path;
  std::optional<std::string> phases_path;
  std::optional<std::string> out_path;
  double tol = 1e-8;
  bool prefactor = true;
};

int run_analyze(const AnalyzeArgs& args) {
  if (args.state_path.has_value() == args.phases_path.has_value()) {
    throw ph::InvalidStateError("analyze needs exactly one of --state / --phases");
  }
  std::optional<ph::StateVector> state;
  if (args.state_path) {
    state = load_state(*args.state_path);
  } else {
    const ph::PhaseProfile profile = load_phases(*args.phases_path);
    state = ph::apply_selective(ph::make_selective_kernel(profile, args.prefactor),
                                ph::plus_product_state(profile.num_qubits(), false));
  }
  const ph::SegreReport report = ph::is_fully_product(*state, args.tol);
  emit_output(ph::emit_segre_report(report), args.out_path);
  return report.verdict == ph::Verdict::Product ? 0 : kExitVerdict;
}

struct EntangleArgs {
  std::string alpha_path;
  std::string out_path;
  double tol = 1e-10;
};

int run_entangle(const EntangleArgs& args) {
  const ph::StateVector alpha = load_state(args.alpha_path);
  const ph::EntanglerR r = ph::build_R(
      std::vector<ph::Complex>(alpha.amplitudes().begin(), alpha.amplitudes().end()));

  ph::write_text_file_atomic(args.out_path, ph::emit_state(ph::apply_R_to_plus(r)));

  const double tau_error = ph::max_abs_diff(
      ph::tau(alpha.amplitudes()), ph::DenseMatrix::diagonal(alpha.amplitudes()));
  const nlohmann::json report = {{"r_unitary", ph::r_unitarity_check(r, args.tol)},
                                 {"tau_is_diag_alpha", tau_error <= args.tol}};
  std::cout << report.dump(2) << "\n";
  return 0;
}

struct SampleArgs {
  int qubits = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;
  double tol = 1e-8;
};

int run_sample(const SampleArgs& args) {
  if (args.qubits < 1) {
    throw ph::InvalidSizeError("--qubits must be at least 1");
  }
  check_cli_qubits(args.qubits);
  const ph::ExperimentSummary summary =
      ph::consistency_experiment(args.qubits, args.trials, args.seed, args.tol);
  const nlohmann::json report = {{"qubits", args.qubits},
                                 {"trials", args.trials},
                                 {"seed", args.seed},
                                 {"agreements", summary.agreements},
                                 {"disagreements", summary.disagreements},
                                 {"entangled_count", summary.entangled_count}};
  emit_output(report.dump(2) + "\n", args.out_path);
  return summary.disagreements == 0 ? 0 : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "phasent: selective phase gate entanglers, controlled-gate synthesis, "
      "and separability analysis"};
  app.require_subcommand(1);

  SynthesizeArgs synthesize_args;
  CLI::App* synthesize =
      app.add_subcommand("synthesize", "Decompose a phase profile into controlled gates");
  synthesize->add_option("--phases", synthesize_args.phases_path, "Phase profile JSON")
      ->required();
  synthesize->add_option("--out", synthesize_args.out_path,
                         "Circuit JSON output path (default: stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check that the synthesized circuit reproduces the kernel");
  verify->add_option("--phases", verify_args.phases_path, "Phase profile JSON")
      ->required();
  verify->add_option("--circuit", verify_args.circuit_path,
                     "Circuit JSON to verify instead of a fresh decomposition");
  verify->add_option("--tol", verify_args.tol, "Acceptance tolerance")
      ->capture_default_str();
  verify->add_option("--out", verify_args.out_path, "Report output path");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Decide entanglement of a state (exit 0 product, 1 entangled)");
  analyze->add_option("--state", analyze_args.state_path, "State JSON to analyze");
  analyze->add_option("--phases", analyze_args.phases_path,
                      "Phase profile JSON; analyzes the kernel output state");
  analyze->add_option("--tol", analyze_args.tol, "Residual tolerance")
      ->capture_default_str();
  analyze->add_flag("--prefactor,!--no-prefactor", analyze_args.prefactor,
                    "Include the normalizing kernel prefactor (default on)");
  analyze->add_option("--out", analyze_args.out_path, "Report output path");

  EntangleArgs entangle_args;
  CLI::App* entangle = app.add_subcommand(
      "entangle", "Apply the geometric entangler to the plus product state");
  entangle->add_option("--alpha", entangle_args.alpha_path, "Coefficient JSON")
      ->required();
  entangle->add_option("--out", entangle_args.out_path, "State JSON output path")
      ->required();
  entangle->add_option("--tol", entangle_args.tol, "Unitarity tolerance")
      ->capture_default_str();

  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand(
      "sample", "Run the seeded verdict-consistency experiment");
  sample->add_option("--qubits", sample_args.qubits, "Qubit count")->required();
  sample->add_option("--trials", sample_args.trials, "Number of trials")->required();
  sample->add_option("--seed", sample_args.seed, "Experiment seed")->required();
  sample->add_option("--tol", sample_args.tol, "Verdict tolerance")
      ->capture_default_str();
  sample->add_option("--out", sample_args.out_path, "Summary output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*synthesize) return run_synthesize(synthesize_args);
    if (*verify) return run_verify(verify_args);
    if (*analyze) return run_analyze(analyze_args);
    if (*entangle) return run_entangle(entangle_args);
    if (*sample) return run_sample(sample_args);
  } catch (const phasent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
