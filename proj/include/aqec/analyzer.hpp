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

// Error-correction criteria on a code subspace.
//
// For each effect A_n the code-restricted operator V^dagger A_n^dagger A_n V
// has largest eigenvalue p_n and smallest p_n lambda_n. Its polar
// decomposition A_n V = W_n S_n (S_n = sqrt of the restriction) gives the
// isometry W_n used for recovery and the residue S_n - sqrt(p_n lambda_n) I.
// The exact criteria ask every V^dagger A_m^dagger A_n V to be a multiple of
// the identity; the approximate ones only bound p_n (1 - lambda_n) by the
// target order and require the W_n to have mutually orthogonal ranges.

#ifndef AQEC_ANALYZER_HPP
#define AQEC_ANALYZER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aqec/channel.hpp"
#include "aqec/code_space.hpp"
#include "aqec/linalg.hpp"

namespace aqec {

/// Builds the channel for a given noise strength.
using ChannelFamily = std::function<KrausChannel(double gamma)>;

/// Tensor power of amplitude damping on `num_qubits` qubits.
ChannelFamily amplitude_damping_family(std::size_t num_qubits);

struct EffectAnalysis {
  std::string index;
  double p = 0.0;       // largest eigenvalue of the restriction
  double lambda = 1.0;  // smallest eigenvalue / p (1 for a vanishing effect)
  CMatrix restricted;   // V^dagger A^dagger A V  (d x d)
  CMatrix sqrt_restricted;
  CMatrix W;            // polar isometry, D x d
  double residue_norm = 0.0;

  double deformation() const { return p * (1.0 - lambda); }
  /// S - sqrt(p lambda) I, in logical coordinates.
  CMatrix residue() const;
};

EffectAnalysis analyze_effect(const Effect& effect, const CodeSpace& code);

struct ExactCheck {
  bool ok = false;
  /// max over (m, n) of || V^dagger A_m^dagger A_n V - g_mn I || with g_mn the
  /// mean of the diagonal.
  double worst_defect = 0.0;
  std::string worst_pair;  // "m,n"
  /// max over n of the spread of the diagonal of V^dagger A_n^dagger A_n V,
  /// i.e. max_i <c_i|A^dagger A|c_i> - min_i <c_i|A^dagger A|c_i>.
  double worst_diagonal_spread = 0.0;
  std::string worst_diagonal_index;
};

ExactCheck exact_criteria_check(std::span<const Effect> effects, const CodeSpace& code, double tol);

struct ApproxCheck {
  bool ok = false;
  bool deformation_ok = false;
  bool orthogonality_ok = false;
  double deformation_bound = 0.0;  // c_max gamma^(t+1)
  double worst_deformation = 0.0;
  std::string worst_deformation_index;
  double worst_orthogonality_defect = 0.0;  // max_{m != n} ||W_m^dagger W_n||
};

/// Checks p_n (1 - lambda_n) <= c_max gamma^(t+1) and W_m^dagger W_n = 0
/// (m != n, within tol.eig) over the given analyses.
ApproxCheck approx_criteria_check(std::span<const EffectAnalysis> analyses, double gamma, int t, double c_max);

/// Worst deformation must shrink by 2^(t+1) when gamma halves.
struct RatioTest {
  double deformation_at_gamma = 0.0;
  double deformation_at_half = 0.0;
  double ratio = 0.0;     // NaN when both deformations vanish
  double expected = 0.0;  // 2^(t+1)
  bool ok = false;
};

inline constexpr double kRatioTolerance = 0.25;

RatioTest deformation_ratio_test(const ChannelFamily& family, const CodeSpace& code, double gamma, int t);

struct DetectionSummary {
  double p_det_min = 0.0;
  double p_sum = 0.0;
  double p_lambda_sum = 0.0;  // fidelity lower bound
};

/// `analyses` must cover `subset`; effects are looked up by index.
DetectionSummary detection_probability(std::span<const EffectAnalysis> analyses, const KrausChannel& channel,
                                       const CodeSpace& code, const std::vector<std::string>& subset);

struct InfidelityFit {
  double exponent = 0.0;  // +inf when every sample is numerically perfect
  double coefficient = 0.0;
};

/// Least-squares fit of log(1 - F) against log(gamma). Needs at least three
/// samples, all in (0, 0.1]. Samples with 1 - F < 1e-14 are dropped; if
/// fewer than two remain the fit is degenerate.
InfidelityFit estimate_infidelity_order(const std::function<double(double)>& fidelity,
                                        std::span<const double> gammas);

struct BalanceReport {
  /// sum_i (1-gamma)^RS_i mu_i per codeword (no-loss non-deformation sums).
  std::vector<double> exact_sums;
  /// sum_i (1-gamma)^(RS_i-1) gamma mu_i n_ij per codeword and mode.
  std::vector<std::vector<double>> loss_sums;
  /// sum_i gamma mu_i n_ij per codeword and mode.
  std::vector<std::vector<double>> avg_excitation;
  bool exact_constant = false;
  bool balanced = false;
};

BalanceReport balance_check(const BosonicCodeSpec& spec, double gamma);

/// Smallest n with logical_dim * (n * effects_per_qubit + 1) <= 2^n.
int nondegenerate_bound(int effects_per_qubit, int logical_dim);

/// Knill-Laflamme matrix g_mn = tr(V^dagger A_m^dagger A_n V) / d.
CMatrix knill_laflamme_matrix(std::span<const Effect> effects, const CodeSpace& code);

/// Unitarily remixes the effects with the eigenvectors of the Knill-Laflamme
/// matrix, so that the mixed effects have diagonal g. Labels become "mix<k>".
std::vector<Effect> diagonalize_effects(std::span<const Effect> effects, const CodeSpace& code);

/// Everything `analyze` reports about one code and channel.
struct CriteriaReport {
  std::string code_label;
  double gamma = 0.0;
  int order_t = 1;
  double c_max = 4.0;

  std::vector<EffectAnalysis> analyses;  // every effect, channel order
  ReversibleSubset subset;
  ExactCheck exact;
  ApproxCheck approx;
  std::optional<RatioTest> ratio;
  DetectionSummary detection;
  std::optional<InfidelityFit> order_estimate;
  double orthonormality_defect = 0.0;
  std::vector<std::string> warnings;

  bool exact_ok = false;
  bool approx_ok = false;

  bool in_subset(const std::string& index) const;
};

struct AnalysisOptions {
  double gamma = 0.01;
  int order_t = 1;
  double c_max = 4.0;
  double exact_tol = 1e-9;
};

/// Runs the full criteria analysis. When `family` is given, the two-point
/// ratio test and the infidelity-order estimate of the lower bound are
/// included; `channel` must then equal family(options.gamma).
CriteriaReport analyze_code(const KrausChannel& channel, const CodeSpace& code, const AnalysisOptions& options,
                            const std::optional<ChannelFamily>& family = std::nullopt);

}  // namespace aqec

#endif  // AQEC_ANALYZER_HPP
