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

#include "aqec/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aqec/errors.hpp"
#include "aqec/tolerances.hpp"

namespace aqec {

ChannelFamily amplitude_damping_family(std::size_t num_qubits) {
  return [num_qubits](double gamma) { return tensor_power_channel(amplitude_damping_kraus(gamma), num_qubits); };
}

// ---------------------------------------------------------------------------
// Per-effect polar data

CMatrix EffectAnalysis::residue() const {
  const std::size_t d = sqrt_restricted.rows();
  return sqrt_restricted - std::sqrt(std::max(p * lambda, 0.0)) * CMatrix::identity(d);
}

EffectAnalysis analyze_effect(const Effect& effect, const CodeSpace& code) {
  if (effect.matrix.cols() != code.physical_dim() || effect.matrix.rows() != code.physical_dim()) {
    throw DimMismatch("effect '" + effect.index + "' does not act on the code's physical space");
  }
  EffectAnalysis out;
  out.index = effect.index;
  const CMatrix image = effect.matrix * code.isometry();
  out.restricted = image.adjoint() * image;

  const EigenDecomposition eig = hermitian_eig(out.restricted);
  out.p = std::max(eig.values.back(), 0.0);
  const double smallest = std::max(eig.values.front(), 0.0);
  out.lambda = out.p > 0.0 ? std::clamp(smallest / out.p, 0.0, 1.0) : 1.0;
  out.sqrt_restricted = psd_sqrt(out.restricted);

  const SingularValueDecomposition s = svd(image);
  out.W = s.u * s.v.adjoint();
  out.residue_norm = operator_norm(out.residue());
  return out;
}

// ---------------------------------------------------------------------------
// Exact criteria

ExactCheck exact_criteria_check(std::span<const Effect> effects, const CodeSpace& code, double tol) {
  const std::size_t d = code.logical_dim();
  std::vector<CMatrix> images;
  images.reserve(effects.size());
  for (const auto& e : effects) {
    if (e.matrix.cols() != code.physical_dim()) throw DimMismatch("effect and code dimensions differ");
    images.push_back(e.matrix * code.isometry());
  }

  ExactCheck out;
  for (std::size_t m = 0; m < effects.size(); ++m) {
    const CMatrix left = images[m].adjoint();
    for (std::size_t n = 0; n < effects.size(); ++n) {
      const CMatrix block = left * images[n];
      const Complex g = block.trace() / static_cast<double>(d);
      const double defect = operator_norm(block - g * CMatrix::identity(d));
      if (defect > out.worst_defect || out.worst_pair.empty()) {
        out.worst_defect = defect;
        out.worst_pair = effects[m].index + "," + effects[n].index;
      }
      if (m == n) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = 0; i < d; ++i) {
          lo = std::min(lo, block(i, i).real());
          hi = std::max(hi, block(i, i).real());
        }
        if (hi - lo > out.worst_diagonal_spread || out.worst_diagonal_index.empty()) {
          out.worst_diagonal_spread = hi - lo;
          out.worst_diagonal_index = effects[m].index;
        }
      }
    }
  }
  out.ok = out.worst_defect <= tol;
  return out;
}

// ---------------------------------------------------------------------------
// Approximate criteria

ApproxCheck approx_criteria_check(std::span<const EffectAnalysis> analyses, double gamma, int t, double c_max) {
  if (!(gamma > 0.0 && gamma <= 0.5)) throw DomainError("gamma must lie in (0, 0.5] for order checks");
  if (t < 0) throw DomainError("order t must be non-negative");
  ApproxCheck out;
  out.deformation_bound = c_max * std::pow(gamma, t + 1);
  for (const auto& a : analyses) {
    if (a.deformation() > out.worst_deformation || out.worst_deformation_index.empty()) {
      out.worst_deformation = a.deformation();
      out.worst_deformation_index = a.index;
    }
  }
  for (std::size_t m = 0; m < analyses.size(); ++m)
    for (std::size_t n = m + 1; n < analyses.size(); ++n)
      out.worst_orthogonality_defect =
          std::max(out.worst_orthogonality_defect, operator_norm(analyses[m].W.adjoint() * analyses[n].W));
  out.deformation_ok = out.worst_deformation <= out.deformation_bound;
  out.orthogonality_ok = out.worst_orthogonality_defect <= tolerances().eig;
  out.ok = out.deformation_ok && out.orthogonality_ok;
  return out;
}

namespace {

std::vector<EffectAnalysis> analyze_subset(const KrausChannel& channel, const CodeSpace& code,
                                           const std::vector<std::string>& subset) {
  std::vector<EffectAnalysis> out;
  for (const auto& index : subset) out.push_back(analyze_effect(*channel.find(index), code));
  return out;
}

double worst_deformation_at(const ChannelFamily& family, const CodeSpace& code, double gamma, int t) {
  const KrausChannel channel = family(gamma);
  const ReversibleSubset subset = select_reversible_subset(channel, code, gamma, t);
  double worst = 0.0;
  for (const auto& a : analyze_subset(channel, code, subset.indices)) worst = std::max(worst, a.deformation());
  return worst;
}

double lower_bound_at(const ChannelFamily& family, const CodeSpace& code, double gamma, int t) {
  const KrausChannel channel = family(gamma);
  const ReversibleSubset subset = select_reversible_subset(channel, code, gamma, t);
  double total = 0.0;
  for (const auto& a : analyze_subset(channel, code, subset.indices)) total += a.p * a.lambda;
  return total;
}

}  // namespace

RatioTest deformation_ratio_test(const ChannelFamily& family, const CodeSpace& code, double gamma, int t) {
  RatioTest out;
  out.expected = std::pow(2.0, t + 1);
  out.deformation_at_gamma = worst_deformation_at(family, code, gamma, t);
  out.deformation_at_half = worst_deformation_at(family, code, gamma / 2, t);
  if (out.deformation_at_half == 0.0 && out.deformation_at_gamma == 0.0) {
    // Undeformed at both points: the exact case.
    out.ratio = std::numeric_limits<double>::quiet_NaN();
    out.ok = true;
    return out;
  }
  out.ratio = out.deformation_at_gamma / out.deformation_at_half;
  // Faster decay than required is fine; only slower decay fails.
  out.ok = out.ratio >= out.expected * (1.0 - kRatioTolerance);
  return out;
}

// ---------------------------------------------------------------------------
// Detection probability and fidelity order

DetectionSummary detection_probability(std::span<const EffectAnalysis> analyses, const KrausChannel& channel,
                                       const CodeSpace& code, const std::vector<std::string>& subset) {
  DetectionSummary out;
  out.p_det_min = min_detection_probability(channel, code, subset);
  for (const auto& index : subset) {
    auto it = std::find_if(analyses.begin(), analyses.end(), [&](const EffectAnalysis& a) { return a.index == index; });
    if (it == analyses.end()) throw DomainError("no analysis for effect '" + index + "'");
    out.p_sum += it->p;
    out.p_lambda_sum += it->p * it->lambda;
  }
  return out;
}

InfidelityFit estimate_infidelity_order(const std::function<double(double)>& fidelity,
                                        std::span<const double> gammas) {
  if (gammas.size() < 3) throw DomainError("infidelity fit needs at least three samples");
  std::vector<double> xs;
  std::vector<double> ys;
  for (double g : gammas) {
    if (!(g > 0.0 && g <= 0.1)) throw DomainError("infidelity fit samples must lie in (0, 0.1]");
    const double infidelity = 1.0 - fidelity(g);
    if (infidelity < 1e-14) continue;
    xs.push_back(std::log(g));
    ys.push_back(std::log(infidelity));
  }
  if (xs.size() < 2) return {std::numeric_limits<double>::infinity(), 0.0};

  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  return {slope, std::exp(intercept)};
}

// ---------------------------------------------------------------------------
// Bosonic balance sums

namespace {

bool constant_across(const std::vector<double>& values, double tol) {
  if (values.empty()) return true;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double scale = std::max(std::abs(*lo), std::abs(*hi));
  return *hi - *lo <= tol * scale;
}

}  // namespace

BalanceReport balance_check(const BosonicCodeSpec& spec, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("gamma must lie in [0, 1]");
  spec.validate();
  const double tol = tolerances().bal;
  const std::size_t m = spec.mode_count;
  BalanceReport out;
  for (const auto& word : spec.codewords) {
    double exact = 0.0;
    std::vector<double> loss(m, 0.0);
    std::vector<double> avg(m, 0.0);
    for (const auto& qcs : word.states) {
      const int rs = qcs.total_excitations();
      exact += std::pow(1.0 - gamma, rs) * qcs.weight;
      for (std::size_t j = 0; j < m; ++j) {
        const int n = qcs.occupations[j];
        if (n == 0) continue;
        loss[j] += std::pow(1.0 - gamma, rs - 1) * gamma * qcs.weight * n;
        avg[j] += gamma * qcs.weight * n;
      }
    }
    out.exact_sums.push_back(exact);
    out.loss_sums.push_back(std::move(loss));
    out.avg_excitation.push_back(std::move(avg));
  }

  out.exact_constant = constant_across(out.exact_sums, tol);
  out.balanced = true;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> column;
    std::vector<double> loss_column;
    for (std::size_t l = 0; l < spec.codewords.size(); ++l) {
      column.push_back(out.avg_excitation[l][j]);
      loss_column.push_back(out.loss_sums[l][j]);
    }
    out.balanced = out.balanced && constant_across(column, tol);
    out.exact_constant = out.exact_constant && constant_across(loss_column, tol);
  }
  return out;
}

int nondegenerate_bound(int effects_per_qubit, int logical_dim) {
  if (effects_per_qubit < 1 || logical_dim < 1) throw DomainError("bound inputs must be at least 1");
  const double e = effects_per_qubit;
  const double d = logical_dim;
  for (int n = 1; n < 1024; ++n)
    if (d * (n * e + 1.0) <= std::ldexp(1.0, n)) return n;
  throw DomainError("bound exceeds 1024 qubits");
}

// ---------------------------------------------------------------------------
// Knill-Laflamme matrix

CMatrix knill_laflamme_matrix(std::span<const Effect> effects, const CodeSpace& code) {
  const double d = static_cast<double>(code.logical_dim());
  std::vector<CMatrix> images;
  for (const auto& e : effects) images.push_back(e.matrix * code.isometry());
  CMatrix g(effects.size(), effects.size());
  for (std::size_t m = 0; m < effects.size(); ++m)
    for (std::size_t n = 0; n < effects.size(); ++n) g(m, n) = (images[m].adjoint() * images[n]).trace() / d;
  return g;
}

std::vector<Effect> diagonalize_effects(std::span<const Effect> effects, const CodeSpace& code) {
  const EigenDecomposition eig = hermitian_eig(knill_laflamme_matrix(effects, code));
  std::vector<Effect> out;
  const std::size_t dim = code.physical_dim();
  // Largest weight first.
  for (std::size_t k = effects.size(); k-- > 0;) {
    CMatrix mixed(dim, dim);
    for (std::size_t m = 0; m < effects.size(); ++m) mixed += eig.vectors(m, k) * effects[m].matrix;
    out.push_back({"mix" + std::to_string(out.size()), std::move(mixed)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Full report

bool CriteriaReport::in_subset(const std::string& index) const {
  return std::find(subset.indices.begin(), subset.indices.end(), index) != subset.indices.end();
}

CriteriaReport analyze_code(const KrausChannel& channel, const CodeSpace& code, const AnalysisOptions& options,
                            const std::optional<ChannelFamily>& family) {
  if (!(options.gamma > 0.0 && options.gamma <= 0.5)) {
    throw DomainError("gamma must be positive (and at most 0.5) for order checks");
  }
  if (channel.dim() != code.physical_dim()) throw DimMismatch("channel and code dimensions differ");

  CriteriaReport report;
  report.code_label = code.label();
  report.gamma = options.gamma;
  report.order_t = options.order_t;
  report.c_max = options.c_max;
  report.orthonormality_defect = code.orthonormality_defect();
  if (!code.is_orthonormal()) {
    std::ostringstream msg;
    msg << "codewords are not orthonormal: max |<c_i|c_j> - delta_ij| = " << code.orthonormality_defect()
        << "; projector and criteria are computed on the stored vectors as given";
    report.warnings.push_back(msg.str());
  }

  for (const auto& e : channel.effects()) report.analyses.push_back(analyze_effect(e, code));
  report.subset = select_reversible_subset(channel, code, options.gamma, options.order_t);
  if (report.subset.indices.empty()) report.warnings.push_back("reversible subset is empty");

  std::vector<EffectAnalysis> reversible;
  for (const auto& a : report.analyses)
    if (report.in_subset(a.index)) reversible.push_back(a);

  report.exact = exact_criteria_check(channel.effects(), code, options.exact_tol);
  report.approx = approx_criteria_check(reversible, options.gamma, options.order_t, options.c_max);
  report.detection = detection_probability(report.analyses, channel, code, report.subset.indices);

  if (family) {
    report.ratio = deformation_ratio_test(*family, code, options.gamma, options.order_t);
    const double top = std::min(options.gamma, 0.1);
    const std::vector<double> gammas = {top, top / 2, top / 4};
    report.order_estimate = estimate_infidelity_order(
        [&](double g) { return lower_bound_at(*family, code, g, options.order_t); }, gammas);
  }

  report.exact_ok = report.exact.ok;
  report.approx_ok = report.approx.ok && (!report.ratio || report.ratio->ok);
  return report;
}

}  // namespace aqec
