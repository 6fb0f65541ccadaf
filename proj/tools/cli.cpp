// Copyright 2026 The AQEC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include "CLI11.hpp"

#include "aqec/analyzer.hpp"
#include "aqec/circuit.hpp"
#include "aqec/code_space.hpp"
#include "aqec/errors.hpp"
#include "aqec/io.hpp"
#include "aqec/recovery.hpp"

namespace aqec::cli {

namespace {

// Thrown for bad command-line values that CLI11 itself cannot catch.
struct UsageError : Error {
  using Error::Error;
};

struct CodeRef {
  std::string name;
  std::string file;
};

void add_code_options(CLI::App* cmd, CodeRef& ref) {
  auto* name = cmd->add_option("--code", ref.name, "built-in code: four-bit, five-bit-printed, five-bit-perfect");
  auto* file = cmd->add_option("--code-file", ref.file, "code-space JSON file");
  name->excludes(file);
}

CodeSpace load_code(const CodeRef& ref) {
  if (!ref.file.empty()) return io::code_from_json(io::load_json_file(ref.file));
  const std::string name = ref.name.empty() ? "four-bit" : ref.name;
  if (name == "four-bit") return four_bit_code();
  if (name == "five-bit-printed") return five_bit_code();
  if (name == "five-bit-perfect") return five_bit_perfect_code();
  throw UsageError("unknown code '" + name + "'");
}

void require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 0.5)) throw UsageError("gamma must lie in (0, 0.5]");
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void print_json(std::ostream& out, const io::Json& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  CodeRef code;
  std::string channel_file;
  double gamma = 0.0;
  int order = 1;
  double c_max = 4.0;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  require_gamma(args.gamma);
  if (args.order < 0) throw UsageError("order must be non-negative");
  const CodeSpace code = load_code(args.code);

  AnalysisOptions options;
  options.gamma = args.gamma;
  options.order_t = args.order;
  options.c_max = args.c_max;

  CriteriaReport report;
  if (!args.channel_file.empty()) {
    const KrausChannel channel = io::channel_from_json(io::load_json_file(args.channel_file));
    report = analyze_code(channel, code, options);
  } else {
    if (code.num_qubits() == 0) throw UsageError("the default channel needs a qubit code");
    const ChannelFamily family = amplitude_damping_family(code.num_qubits());
    report = analyze_code(family(args.gamma), code, options, family);
  }

  std::vector<std::string> notes;
  if (args.channel_file.empty() && args.code.file.empty() && code.label() == "four-bit") {
    notes.push_back(
        "single-loss effects restrict to p = gamma(1-gamma)/2 and p*lambda = gamma(1-gamma)^3/2; "
        "the 1/2 is the codeword normalization");
  }
  print_json(out, io::report_to_json(report, notes));
  return report.approx_ok ? kExitOk : kExitCriteriaFailed;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  CodeRef code;
  double gamma_min = 1e-3;
  double gamma_max = 1e-1;
  int points = 9;
  int order = 1;
  std::string out;
  bool linear = false;
};

std::vector<double> sweep_gammas(const SweepArgs& args) {
  std::vector<double> gammas(static_cast<std::size_t>(args.points));
  const double last = args.points - 1;
  for (int i = 0; i < args.points; ++i) {
    const double s = i / last;
    gammas[i] = args.linear ? args.gamma_min + s * (args.gamma_max - args.gamma_min)
                            : std::exp(std::log(args.gamma_min) + s * (std::log(args.gamma_max) - std::log(args.gamma_min)));
  }
  gammas.front() = args.gamma_min;  // endpoints exactly as given
  gammas.back() = args.gamma_max;
  return gammas;
}

int cmd_sweep(const SweepArgs& args) {
  if (!(args.gamma_min > 0.0 && args.gamma_min < args.gamma_max && args.gamma_max <= 0.5)) {
    throw UsageError("need 0 < gamma-min < gamma-max <= 0.5");
  }
  if (args.points < 2) throw UsageError("points must be at least 2");
  const CodeSpace code = load_code(args.code);
  if (code.num_qubits() == 0) throw UsageError("sweeps need a qubit code");
  // Only the four-bit code has a gate-level recovery; other codes leave the
  // f_circuit column empty.
  const bool has_circuit = args.code.file.empty() && code.label() == "four-bit";
  const ChannelFamily family = amplitude_damping_family(code.num_qubits());

  // Compute everything before touching the output file.
  std::string csv = "gamma,f_canonical,f_circuit,lower_bound,worst_deformation\n";
  for (const double gamma : sweep_gammas(args)) {
    const KrausChannel channel = family(gamma);
    AnalysisOptions options;
    options.gamma = gamma;
    options.order_t = args.order;
    const CriteriaReport report = analyze_code(channel, code, options);
    const RecoveryChannel rec = build_canonical_recovery(channel, code, gamma, args.order);
    const double f_canonical = worst_case_fidelity(code, channel, rec, {.allow_random_restart = true}).f_min;

    csv += format_real(gamma) + ',' + format_real(f_canonical) + ',';
    if (has_circuit) csv += format_real(circuit_fidelity(gamma));
    csv += ',' + format_real(report.detection.p_lambda_sum) + ',' + format_real(report.approx.worst_deformation) +
           '\n';
  }

  std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write '" + args.out + "'");
  file << csv;
  file.close();
  if (!file) throw UsageError("failed writing '" + args.out + "'");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bound, balance, simulate

int cmd_bound(int effects, int dim, std::ostream& out) {
  if (effects < 1 || dim < 1) throw UsageError("effects and dim must be at least 1");
  out << nondegenerate_bound(effects, dim) << '\n';
  return kExitOk;
}

struct BalanceArgs {
  CodeRef code;
  std::string spec_file;
  double gamma = 0.0;
};

int cmd_balance(const BalanceArgs& args, std::ostream& out) {
  if (!(args.gamma > 0.0 && args.gamma <= 1.0)) throw UsageError("gamma must lie in (0, 1]");
  io::Json doc;
  if (!args.spec_file.empty()) {
    const BosonicCodeSpec spec = io::bosonic_from_json(io::load_json_file(args.spec_file));
    doc = io::Json::object();
    doc["source"] = args.spec_file;
    doc.update(io::balance_to_json(balance_check(spec, args.gamma), args.gamma));
  } else {
    const CodeSpace code = load_code(args.code);
    const BosonicCodeSpec spec = qubit_code_to_bosonic_spec(code);
    doc = io::Json::object();
    doc["source"] = code.label();
    doc["orthonormality_defect"] = code.orthonormality_defect();
    doc.update(io::balance_to_json(balance_check(spec, args.gamma), args.gamma));
  }
  print_json(out, doc);
  return kExitOk;
}

struct SimulateArgs {
  CodeRef code;
  double gamma = 0.0;
  double a_re = 1.0, a_im = 0.0, b_re = 0.0, b_im = 0.0;
  std::string mode = "canonical";
  int order = 1;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  if (!(args.gamma >= 0.0 && args.gamma <= 0.5)) throw UsageError("gamma must lie in [0, 0.5]");
  const Complex a(args.a_re, args.a_im);
  const Complex b(args.b_re, args.b_im);
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-10) throw UsageError("|a|^2 + |b|^2 must equal 1");

  io::Json doc = io::Json::object();
  doc["mode"] = args.mode;
  doc["gamma"] = args.gamma;
  doc["input"] = {{"a_re", args.a_re}, {"a_im", args.a_im}, {"b_re", args.b_re}, {"b_im", args.b_im}};

  if (args.mode == "circuit") {
    if (!args.code.file.empty() || (!args.code.name.empty() && args.code.name != "four-bit")) {
      throw UsageError("circuit mode exists only for the four-bit code");
    }
    const FourBitCircuit::Run run = FourBitCircuit(args.gamma).run(a, b);
    doc["code"] = "four-bit";
    doc["fidelity"] = run.fidelity;
    doc["failure_weight"] = run.failure_weight;
    doc["output"] = io::matrix_to_json(run.success_state);
  } else {
    const CodeSpace code = load_code(args.code);
    if (code.logical_dim() != 2) throw UsageError("simulate takes a qubit input; the code is not a qubit code");
    const KrausChannel channel = amplitude_damping_family(code.num_qubits())(args.gamma);
    // At gamma = 0 every effect but the identity vanishes; use the order-0
    // threshold so the identity effect is still selected.
    const double epsilon = args.gamma > 0.0 ? args.gamma : 0.5;
    const RecoveryChannel rec = build_canonical_recovery(channel, code, epsilon, args.order);
    const DensityMatrix rho = apply_channel(channel, DensityMatrix::pure(encode(code, std::vector<Complex>{a, b})));
    const RecoveryOutput recovered = apply_recovery(rec, rho);
    doc["code"] = code.label();
    doc["fidelity"] = recovery_fidelity(code, channel, rec, std::vector<Complex>{a, b});
    doc["failure_weight"] = recovered.failure_weight;
    doc["output"] = io::matrix_to_json(recovered.logical.matrix());
  }
  print_json(out, doc);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate quantum error correction analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", [] { return std::string(kVersion); });

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "check the exact and approximate criteria for a code");
  add_code_options(a, analyze.code);
  a->add_option("--channel-file", analyze.channel_file, "channel JSON file (default: amplitude damping)");
  a->add_option("--gamma", analyze.gamma, "damping strength in (0, 0.5]")->required();
  a->add_option("--order", analyze.order, "target order t");
  a->add_option("--c-max", analyze.c_max, "deformation constant");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "tabulate fidelities over a range of gamma");
  add_code_options(s, sweep.code);
  s->add_option("--gamma-min", sweep.gamma_min);
  s->add_option("--gamma-max", sweep.gamma_max);
  s->add_option("--points", sweep.points);
  s->add_option("--order", sweep.order);
  s->add_option("--out", sweep.out, "CSV output path")->required();
  s->add_flag("--linear", sweep.linear, "linear instead of logarithmic spacing");

  int effects = 0;
  int dim = 0;
  auto* b = app.add_subcommand("bound", "smallest block length allowed by the counting bound");
  b->add_option("--effects", effects, "correctable effects per qubit")->required();
  b->add_option("--dim", dim, "logical dimension")->required();

  BalanceArgs balance;
  auto* bal = app.add_subcommand("balance", "average-excitation balance sums");
  add_code_options(bal, balance.code);
  bal->add_option("--spec-file", balance.spec_file, "bosonic code JSON file")->excludes("--code")->excludes("--code-file");
  bal->add_option("--gamma", balance.gamma)->required();

  SimulateArgs simulate;
  auto* sim = app.add_subcommand("simulate", "run one recovery on a logical input");
  add_code_options(sim, simulate.code);
  sim->add_option("--gamma", simulate.gamma)->required();
  sim->add_option("--a-re", simulate.a_re);
  sim->add_option("--a-im", simulate.a_im);
  sim->add_option("--b-re", simulate.b_re);
  sim->add_option("--b-im", simulate.b_im);
  sim->add_option("--mode", simulate.mode)->check(CLI::IsMember({"canonical", "circuit"}));
  sim->add_option("--order", simulate.order);

  // CLI11 wants argv in reverse order when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    err << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*a) return cmd_analyze(analyze, out);
    if (*s) return cmd_sweep(sweep);
    if (*b) return cmd_bound(effects, dim, out);
    if (*bal) return cmd_balance(balance, out);
    if (*sim) return cmd_simulate(simulate, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace aqec::cli
