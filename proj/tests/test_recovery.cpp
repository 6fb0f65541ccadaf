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

#include <numbers>

#include "aqec/errors.hpp"
#include "aqec/recovery.hpp"
#include "test_util.hpp"

namespace aqec {
namespace {

using testing::max_diff;

KrausChannel damping4(double gamma) { return tensor_power_channel(amplitude_damping_kraus(gamma), 4); }

// Rank of a Hermitian projector-like matrix.
int rank_of(const CMatrix& m) {
  int r = 0;
  for (double v : hermitian_eig(m).values) r += v > 0.5;
  return r;
}

TEST(CanonicalRecovery, StructureAtTenPercent) {
  const double gamma = 0.1;
  const CodeSpace code = four_bit_code();
  const RecoveryChannel rec = build_canonical_recovery(damping4(gamma), code, gamma, 1);
  EXPECT_EQ(rec.reversal_ops().size(), 5u);
  EXPECT_EQ(rec.physical_dim(), 16u);
  EXPECT_EQ(rec.logical_dim(), 2u);
  EXPECT_LE(rec.completeness_defect(), 1e-10);
  const CMatrix& pe = rec.error_projector();
  EXPECT_LT(max_diff(pe * pe, pe), 1e-12);
  EXPECT_EQ(rank_of(pe), 6);
}

TEST(CanonicalRecovery, ZeroDampingDecodes) {
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(0.0);
  const RecoveryChannel rec = build_canonical_recovery(ch, code, 0.01, 1);
  const CVector logical = CVector{Complex(0.6, 0.0), Complex(0.0, 0.8)};
  const DensityMatrix rho = DensityMatrix::pure(encode(code, logical.entries()));
  const RecoveryOutput out = apply_recovery(rec, apply_channel(ch, rho));
  EXPECT_LT(max_diff(out.logical.matrix(), CMatrix::outer(logical, logical)), 1e-14);
  EXPECT_NEAR(out.failure_weight, 0.0, 1e-15);
}

TEST(CanonicalRecovery, ErrorSpaceIsFailure) {
  const double gamma = 0.1;
  const CodeSpace code = four_bit_code();
  const RecoveryChannel rec = build_canonical_recovery(damping4(gamma), code, gamma, 1);
  // |0101> is hit only by double losses, so it lies in range(P_E).
  const DensityMatrix rho = DensityMatrix::pure(CVector::basis(16, testing::ket("0101")));
  const RecoveryOutput out = apply_recovery(rec, rho);
  EXPECT_NEAR(out.failure_weight, 1.0, 1e-14);
  EXPECT_NEAR(out.logical.trace(), 0.0, 1e-14);
  EXPECT_THROW(apply_recovery(rec, DensityMatrix::pure(CVector{1.0, 0.0})), DimMismatch);
}

TEST(CanonicalRecovery, ZeroLogicalFidelityIsOneMinusThreeGammaSquared) {
  for (double gamma : {0.01, 0.1}) {
    const CodeSpace code = four_bit_code();
    const KrausChannel ch = damping4(gamma);
    const RecoveryChannel rec = build_canonical_recovery(ch, code, gamma, 1);
    const CVector zero{1.0, 0.0};
    const RecoveryOutput out = apply_recovery(rec, apply_channel(ch, DensityMatrix::pure(encode(code, zero.entries()))));
    const double f = out.logical.expectation(zero);
    EXPECT_NEAR(f, 1 - 3 * gamma * gamma, 5 * std::pow(gamma, 3)) << gamma;
    EXPECT_NEAR(f, recovery_fidelity(code, ch, rec, zero.entries()), 1e-14);
  }
}

TEST(CanonicalRecovery, OverlappingIsometriesRejected) {
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(0.1);
  std::vector<EffectAnalysis> analyses{analyze_effect(*ch.find("0000"), code),
                                       analyze_effect(*ch.find("0000"), code)};
  analyses[1].index = "copy";
  EXPECT_THROW(canonical_recovery(analyses, code), OrthogonalityViolation);
}

TEST(WorstCase, IdentityChannel) {
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = identity_channel(16);
  std::vector<EffectAnalysis> analyses{analyze_effect(ch.effects()[0], code)};
  const RecoveryChannel rec = canonical_recovery(analyses, code);
  EXPECT_NEAR(worst_case_fidelity(code, ch, rec).f_min, 1.0, 1e-12);
}

TEST(WorstCase, CanonicalMinimizerIsZeroLogical) {
  const double gamma = 0.01;
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(gamma);
  const RecoveryChannel rec = build_canonical_recovery(ch, code, gamma, 1);
  const WorstCase w = worst_case_fidelity(code, ch, rec);
  EXPECT_NEAR(w.f_min, 1 - 3 * gamma * gamma, 5 * std::pow(gamma, 3));
  ASSERT_EQ(w.argmin.size(), 2u);
  EXPECT_NEAR(std::norm(w.argmin[0]), 1.0, 1e-6);
  // Exhaustive check on a coarse grid never beats the minimizer.
  for (int i = 0; i <= 10; ++i) {
    const double t = std::numbers::pi * i / 10;
    const std::vector<Complex> amps{std::cos(t / 2), std::sin(t / 2)};
    EXPECT_GE(recovery_fidelity(code, ch, rec, amps), w.f_min - 1e-12);
  }
}

TEST(WorstCase, UnitSphereSearchNeedsOptIn) {
  const CodeSpace qutrit = CodeSpace("qutrit", CMatrix::identity(3));
  const KrausChannel ch = identity_channel(3);
  std::vector<EffectAnalysis> analyses{analyze_effect(ch.effects()[0], qutrit)};
  const RecoveryChannel rec = canonical_recovery(analyses, qutrit);
  EXPECT_THROW(worst_case_fidelity(qutrit, ch, rec), UnsupportedDim);
  const WorstCase w = worst_case_fidelity(qutrit, ch, rec, {.allow_random_restart = true});
  EXPECT_NEAR(w.f_min, 1.0, 1e-12);
}

TEST(Minimizers, FindKnownMinimum) {
  // f(a, b) = 1 - |b|^2 / 2 has its minimum 1/2 at |1>.
  const WorstCase w = minimize_over_bloch_sphere([](Complex, Complex b) { return 1 - std::norm(b) / 2; });
  EXPECT_NEAR(w.f_min, 0.5, 1e-14);
  EXPECT_NEAR(std::norm(w.argmin[1]), 1.0, 1e-12);

  // Interior minimum in both angles: f = |<target|psi>|^2 is smallest on the
  // antipode of target.
  const CVector target = CVector{std::cos(0.4), std::polar(std::sin(0.4), 1.1)};
  const WorstCase v = minimize_over_unit_sphere(
      [&](const CVector& psi) { return std::norm(inner(target, psi)); }, 2, 7);
  EXPECT_NEAR(v.f_min, 0.0, 1e-12);
}

TEST(RecoveryFidelity, InputValidation) {
  const CodeSpace code = four_bit_code();
  const KrausChannel ch = damping4(0.1);
  const RecoveryChannel rec = build_canonical_recovery(ch, code, 0.1, 1);
  EXPECT_THROW(recovery_fidelity(code, ch, rec, std::vector<Complex>{1.0, 1.0}), NotNormalized);
  EXPECT_THROW(recovery_fidelity(code, ch, rec, std::vector<Complex>{1.0}), DimMismatch);
  EXPECT_THROW(recovery_fidelity(code, identity_channel(8), rec, std::vector<Complex>{1.0, 0.0}), DimMismatch);
}

}  // namespace
}  // namespace aqec
