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

#include <gtest/gtest.h>

#include "aqec/analyzer.hpp"
#include "aqec/errors.hpp"
#include "aqec/gates.hpp"
#include "test_util.hpp"

namespace aqec {
namespace {

using testing::ket;
using testing::max_diff;
using testing::phase_distance;

KrausChannel damping4(double gamma) { return tensor_power_channel(amplitude_damping_kraus(gamma), 4); }

EffectAnalysis analyze(const char* index, double gamma) {
  return analyze_effect(*damping4(gamma).find(index), four_bit_code());
}

TEST(Restriction, NoLossEigenvalues) {
  for (double gamma : {0.001, 0.01, 0.1}) {
    const double x = 1 - gamma;
    // The no-loss effect restricted to the code is diagonal in the logical basis.
    const CMatrix& m = analyze("0000", gamma).restricted;
    const auto eig = hermitian_eig(m);
    EXPECT_NEAR(eig.values[0], x * x, 1e-14);
    EXPECT_NEAR(eig.values[1], (1 + std::pow(x, 4)) / 2, 1e-14);
  }
}

TEST(Restriction, ProjectedOperatorOnFullSpace) {
  const double gamma = 0.1;
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(gamma);
  const CMatrix& a = ch.find("0000")->matrix;
  const CMatrix pc = code.projector();
  const auto eig = hermitian_eig(pc * a.adjoint() * a * pc);
  EXPECT_NEAR(eig.values[15], 0.82805, 1e-12);
  EXPECT_NEAR(eig.values[14], 0.81, 1e-12);
  for (int i = 0; i < 14; ++i) EXPECT_NEAR(eig.values[i], 0.0, 1e-12);
}

TEST(AnalyzeEffect, NoLoss) {
  const EffectAnalysis a = analyze("0000", 0.1);
  EXPECT_NEAR(a.p, 0.82805, 1e-12);
  EXPECT_NEAR(a.p * a.lambda, 0.81, 1e-12);
}

TEST(AnalyzeEffect, SingleLossCarriesHalfFactor) {
  const double gamma = 0.1;
  const EffectAnalysis a = analyze("1000", gamma);
  EXPECT_NEAR(a.p, gamma * (1 - gamma) / 2, 1e-14);
  EXPECT_NEAR(a.p * a.lambda, gamma * std::pow(1 - gamma, 3) / 2, 1e-14);
  // Square root of the restriction, in the logical basis.
  EXPECT_NEAR(a.sqrt_restricted(0, 0).real(), std::sqrt(gamma * std::pow(1 - gamma, 3) / 2), 1e-14);
  EXPECT_NEAR(a.sqrt_restricted(1, 1).real(), std::sqrt(gamma * (1 - gamma) / 2), 1e-14);
  EXPECT_NEAR(std::abs(a.sqrt_restricted(0, 1)), 0.0, 1e-14);
}

TEST(AnalyzeEffect, IdentityEffect) {
  const CodeSpace code = four_bit_code();
  const EffectAnalysis a = analyze_effect({"I", CMatrix::identity(16)}, code);
  EXPECT_NEAR(a.p, 1.0, 1e-14);
  EXPECT_NEAR(a.lambda, 1.0, 1e-14);
  EXPECT_NEAR(a.residue_norm, 0.0, 1e-14);
  EXPECT_LT(max_diff(a.W, code.isometry()), 1e-14);
}

TEST(AnalyzeEffect, ZeroEffectIsSkippable) {
  const EffectAnalysis a = analyze_effect({"Z", CMatrix(16, 16)}, four_bit_code());
  EXPECT_EQ(a.p, 0.0);
  EXPECT_EQ(a.lambda, 1.0);
  EXPECT_LT(max_diff(a.W.adjoint() * a.W, CMatrix::identity(2)), 1e-14);  // still an isometry
  EXPECT_THROW(analyze_effect({"bad", CMatrix::identity(8)}, four_bit_code()), DimMismatch);
}

TEST(PolarIsometry, NoLossRotatesZeroLogical) {
  const double gamma = 0.1;
  const double theta = std::atan(std::pow(1 - gamma, 2));
  const EffectAnalysis a = analyze("0000", gamma);
  CVector expected(16);
  expected[ket("0000")] = std::cos(theta);
  expected[ket("1111")] = std::sin(theta);
  EXPECT_LT(phase_distance(a.W.column(0), expected), 1e-14);
  EXPECT_LT(phase_distance(a.W.column(1), four_bit_code().codeword(1)), 1e-14);
}

TEST(PolarIsometry, SingleLossMapsToBasisKets) {
  const EffectAnalysis a = analyze("1000", 0.1);
  EXPECT_LT(phase_distance(a.W.column(0), CVector::basis(16, ket("0111"))), 1e-14);
  EXPECT_LT(phase_distance(a.W.column(1), CVector::basis(16, ket("0100"))), 1e-14);
}

TEST(PolarIsometry, ReproducesEffectOnCode) {
  // A V = W S for every effect.
  const CodeSpace code = four_bit_code();
  for (const auto& e : damping4(0.2).effects()) {
    const EffectAnalysis a = analyze_effect(e, code);
    EXPECT_LT(max_diff(e.matrix * code.isometry(), a.W * a.sqrt_restricted), 1e-13) << e.index;
  }
}

TEST(Residue, NoLossIsGammaSquared) {
  for (double gamma : {0.01, 0.05, 0.1}) {
    // sqrt((1 + (1-g)^4)/2) - (1-g) = g^2 - g^4/4 + ...
    EXPECT_NEAR(analyze("0000", gamma).residue_norm, gamma * gamma, std::pow(gamma, 4)) << gamma;
  }
}

TEST(ExactCriteria, FourBitFails) {
  const double gamma = 0.1;
  const KrausChannel ch = damping4(gamma);
  const ExactCheck check = exact_criteria_check(ch.effects(), four_bit_code(), 1e-9);
  EXPECT_FALSE(check.ok);
  const double x = 1 - gamma;
  const double spread = (1 + std::pow(x, 4)) / 2 - x * x;
  EXPECT_NEAR(spread, 0.01805, 1e-12);
  // No effect is deformed more than the no-loss one.
  EXPECT_NEAR(check.worst_diagonal_spread, spread, 1e-12);
  EXPECT_EQ(check.worst_diagonal_index, "0000");
}

TEST(ExactCriteria, ZeroDampingPasses) {
  const KrausChannel ch = damping4(0.0);
  EXPECT_TRUE(exact_criteria_check(ch.effects(), four_bit_code(), 1e-12).ok);
}

TEST(ExactCriteria, UnitaryPasses) {
  const CodeSpace code = four_bit_code();
  const std::vector<Effect> effects{{"U", gates::on_qubit(gates::y_rotation(0.3), 2, 4)}};
  const ExactCheck check = exact_criteria_check(effects, code, 1e-12);
  EXPECT_TRUE(check.ok);
  EXPECT_NEAR(knill_laflamme_matrix(effects, code)(0, 0).real(), 1.0, 1e-14);
}

TEST(ApproxCriteria, FourBitFirstOrder) {
  const double gamma = 0.01;
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(gamma);
  std::vector<EffectAnalysis> analyses;
  for (const auto& idx : select_reversible_subset(ch, code, gamma, 1).indices)
    analyses.push_back(analyze_effect(*ch.find(idx), code));
  const ApproxCheck check = approx_criteria_check(analyses, gamma, 1, 4.0);
  EXPECT_TRUE(check.ok);
  EXPECT_EQ(check.worst_deformation_index, "0000");
  EXPECT_NEAR(check.worst_deformation, 2 * gamma * gamma, 0.05 * 2 * gamma * gamma);
  EXPECT_LE(check.worst_orthogonality_defect, 1e-10);
  EXPECT_THROW(approx_criteria_check(analyses, 0.0, 1, 4.0), DomainError);
  EXPECT_THROW(approx_criteria_check(analyses, 0.6, 1, 4.0), DomainError);
}

TEST(ApproxCriteria, TooStrictOrderFails) {
  const double gamma = 0.01;
  const CodeSpace code = four_bit_code();
  const std::vector<EffectAnalysis> analyses{analyze("0000", gamma)};
  EXPECT_FALSE(approx_criteria_check(analyses, gamma, 2, 4.0).ok);  // 2 g^2 > 4 g^3
}

TEST(ApproxCriteria, ReducesToExactWhenUndeformed) {
  const CodeSpace code = five_bit_perfect_code();
  std::vector<EffectAnalysis> analyses{analyze_effect({"I", CMatrix::identity(32)}, code)};
  for (std::size_t q = 0; q < 5; ++q)
    analyses.push_back(analyze_effect({"X" + std::to_string(q), gates::on_qubit(gates::pauli_x(), q, 5)}, code));
  const ApproxCheck check = approx_criteria_check(analyses, 0.1, 1, 4.0);
  EXPECT_TRUE(check.ok);
  EXPECT_NEAR(check.worst_deformation, 0.0, 1e-14);
}

TEST(RatioTest, ScalesByFour) {
  const RatioTest r = deformation_ratio_test(amplitude_damping_family(4), four_bit_code(), 0.01, 1);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.expected, 4.0);
  EXPECT_NEAR(r.ratio, 4.0, 0.25 * 4.0);
}

TEST(RatioTest, UndeformedCodeIsFine) {
  const ChannelFamily unitary = [](double) { return identity_channel(16); };
  const RatioTest r = deformation_ratio_test(unitary, four_bit_code(), 0.01, 1);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(std::isnan(r.ratio));
}

TEST(Detection, FourBitLowerBound) {
  const double gamma = 0.1;
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(gamma);
  const auto subset = select_reversible_subset(ch, code, gamma, 1);
  std::vector<EffectAnalysis> analyses;
  for (const auto& e : ch.effects()) analyses.push_back(analyze_effect(e, code));
  const DetectionSummary d = detection_probability(analyses, ch, code, subset.indices);
  const double x = 1 - gamma;
  EXPECT_NEAR(d.p_lambda_sum, x * x + 2 * gamma * x * x * x, 1e-13);
  EXPECT_NEAR(d.p_lambda_sum, 0.9558, 1e-12);
  EXPECT_LE(d.p_det_min, 1.0);
}

TEST(Detection, ZeroDampingAndFullSet) {
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(0.0);
  std::vector<EffectAnalysis> analyses{analyze_effect(*ch.find("0000"), code)};
  const DetectionSummary d = detection_probability(analyses, ch, code, {"0000"});
  EXPECT_NEAR(d.p_det_min, 1.0, 1e-14);
  EXPECT_NEAR(d.p_sum, 1.0, 1e-14);
  EXPECT_NEAR(d.p_lambda_sum, 1.0, 1e-14);

  const KrausChannel noisy = damping4(0.3);
  std::vector<EffectAnalysis> all;
  std::vector<std::string> names;
  for (const auto& e : noisy.effects()) {
    all.push_back(analyze_effect(e, code));
    names.push_back(e.index);
  }
  EXPECT_NEAR(detection_probability(all, noisy, code, names).p_det_min, 1.0, 1e-12);
  EXPECT_THROW(detection_probability(analyses, ch, code, {"1000"}), DomainError);
}

TEST(InfidelityFit, ExactPowerLaw) {
  const std::vector<double> gammas{1e-2, 3e-3, 1e-3};
  const InfidelityFit fit = estimate_infidelity_order([](double g) { return 1 - 5 * g * g; }, gammas);
  EXPECT_NEAR(fit.exponent, 2.0, 0.05);
  EXPECT_NEAR(fit.coefficient, 5.0, 0.25);
}

TEST(InfidelityFit, DegenerateAndInvalid) {
  const std::vector<double> gammas{1e-2, 3e-3, 1e-3};
  EXPECT_TRUE(std::isinf(estimate_infidelity_order([](double) { return 1.0; }, gammas).exponent));
  const std::vector<double> two{1e-2, 1e-3};
  EXPECT_THROW(estimate_infidelity_order([](double g) { return 1 - g; }, two), DomainError);
  const std::vector<double> large{0.5, 0.2, 0.1};
  EXPECT_THROW(estimate_infidelity_order([](double g) { return 1 - g; }, large), DomainError);
}

TEST(Balance, FourBitBalancedButNotExact) {
  const double gamma = 0.1;
  const BalanceReport r = balance_check(qubit_code_to_bosonic_spec(four_bit_code()), gamma);
  EXPECT_TRUE(r.balanced);
  for (const auto& word : r.avg_excitation)
    for (double v : word) EXPECT_NEAR(v, gamma / 2, 1e-15);
  EXPECT_NEAR(r.exact_sums[0], 0.82805, 1e-12);
  EXPECT_NEAR(r.exact_sums[1], 0.81, 1e-12);
  EXPECT_FALSE(r.exact_constant);
}

TEST(Balance, PrintedFiveBitSums) {
  const BalanceReport r = balance_check(qubit_code_to_bosonic_spec(five_bit_code()), 0.1);
  ASSERT_EQ(r.avg_excitation.size(), 2u);
  // Hand count of ones per column over the printed kets, times gamma / 8.
  const int ones0[5] = {4, 4, 4, 4, 4};
  const int ones1[5] = {4, 4, 3, 5, 3};
  for (int j = 0; j < 5; ++j) {
    EXPECT_NEAR(r.avg_excitation[0][j], 0.1 * ones0[j] / 8, 1e-15);
    EXPECT_NEAR(r.avg_excitation[1][j], 0.1 * ones1[j] / 8, 1e-15);
  }
  EXPECT_FALSE(r.balanced);  // flagged, not corrected
}

TEST(Balance, SingleCodewordIsVacuous) {
  BosonicCodeSpec spec;
  spec.mode_count = 3;
  spec.codewords.push_back({{{1.0, {1, 0, 2}}}});
  EXPECT_TRUE(balance_check(spec, 0.2).balanced);
  EXPECT_THROW(balance_check(spec, 1.5), DomainError);
}

TEST(CountingBound, KnownValues) {
  EXPECT_EQ(nondegenerate_bound(1, 2), 3);
  EXPECT_EQ(nondegenerate_bound(2, 2), 5);
  EXPECT_EQ(nondegenerate_bound(3, 2), 5);
  EXPECT_EQ(nondegenerate_bound(1, 1), 1);
  EXPECT_THROW(nondegenerate_bound(0, 2), DomainError);
}

TEST(KnillLaflamme, DiagonalizedEffectsHaveDiagonalMatrix) {
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(0.2);
  const std::vector<Effect> mixed = diagonalize_effects(ch.effects(), code);
  ASSERT_EQ(mixed.size(), ch.size());
  EXPECT_EQ(mixed.front().index, "mix0");
  const CMatrix g = knill_laflamme_matrix(mixed, code);
  for (std::size_t m = 0; m < g.rows(); ++m)
    for (std::size_t n = 0; n < g.cols(); ++n)
      if (m != n) {
        EXPECT_NEAR(std::abs(g(m, n)), 0.0, 1e-12);
      }
  for (std::size_t m = 1; m < g.rows(); ++m) EXPECT_GE(g(m - 1, m - 1).real(), g(m, m).real() - 1e-14);
  // Remixing is unitary on the effect index, so the channel is unchanged.
  const KrausChannel rebuilt(16, mixed);
  EXPECT_LE(rebuilt.completeness_defect(), 1e-12);
}

TEST(AnalyzeCode, FourBitReport) {
  AnalysisOptions options;
  options.gamma = 0.01;
  const auto family = amplitude_damping_family(4);
  const CriteriaReport r = analyze_code(family(0.01), four_bit_code(), options, family);
  EXPECT_FALSE(r.exact_ok);
  EXPECT_TRUE(r.approx_ok);
  EXPECT_EQ(r.analyses.size(), 16u);
  EXPECT_EQ(r.subset.indices.size(), 5u);
  EXPECT_TRUE(r.in_subset("1000"));
  EXPECT_FALSE(r.in_subset("1100"));
  ASSERT_TRUE(r.ratio.has_value());
  ASSERT_TRUE(r.order_estimate.has_value());
  EXPECT_NEAR(r.order_estimate->exponent, 2.0, 0.1);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(AnalyzeCode, PrintedFiveBitWarns) {
  AnalysisOptions options;
  const auto family = amplitude_damping_family(5);
  const CriteriaReport r = analyze_code(family(0.01), five_bit_code(), options, family);
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NEAR(r.orthonormality_defect, 0.125, 1e-15);
}

TEST(AnalyzeCode, RejectsBadGamma) {
  AnalysisOptions options;
  options.gamma = 0.0;
  EXPECT_THROW(analyze_code(damping4(0.0), four_bit_code(), options), DomainError);
  options.gamma = 0.01;
  EXPECT_THROW(analyze_code(tensor_power_channel(amplitude_damping_kraus(0.01), 3), four_bit_code(), options),
               DimMismatch);
}

}  // namespace
}  // namespace aqec
