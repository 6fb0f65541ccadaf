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

#include <algorithm>

#include "aqec/errors.hpp"
#include "aqec/gates.hpp"
#include "aqec/linalg.hpp"
#include "test_util.hpp"

namespace aqec {
namespace {

using testing::damping_a0;
using testing::damping_a1;
using testing::max_diff;

TEST(TensorProduct, IdentityTimesIdentity) {
  EXPECT_EQ(max_diff(tensor_product(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4)), 0.0);
}

TEST(TensorProduct, UndampedEffectsGiveIdentity) {
  EXPECT_EQ(max_diff(tensor_product(damping_a0(0.0), damping_a0(0.0)), CMatrix::identity(4)), 0.0);
}

TEST(TensorProduct, HandExpandedEntries) {
  const double gamma = 0.3;
  const CMatrix k = tensor_product(damping_a0(gamma), damping_a1(gamma));
  EXPECT_EQ(k(1, 1), Complex(0.0));               // row "01", col "01"
  EXPECT_NEAR(k(0, 1).real(), std::sqrt(gamma), 1e-15);  // row "00", col "01"
  EXPECT_NEAR(k(2, 3).real(), std::sqrt(gamma * (1 - gamma)), 1e-15);
}

TEST(TensorProduct, Vectors) {
  const CVector v = tensor_product(CVector{1.0, 2.0}, CVector{3.0, Complex(0.0, 1.0)});
  ASSERT_EQ(v.dim(), 4u);
  EXPECT_EQ(v[0], Complex(3.0));
  EXPECT_EQ(v[1], Complex(0.0, 1.0));
  EXPECT_EQ(v[2], Complex(6.0));
  EXPECT_EQ(v[3], Complex(0.0, 2.0));
}

TEST(HermitianEig, DiagonalInput) {
  const auto eig = hermitian_eig(CMatrix({{3.0, 0.0}, {0.0, 1.0}}));
  ASSERT_EQ(eig.values.size(), 2u);
  EXPECT_DOUBLE_EQ(eig.values[0], 1.0);
  EXPECT_DOUBLE_EQ(eig.values[1], 3.0);
}

TEST(HermitianEig, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eig(CMatrix({{1.0, 1.0}, {0.0, 1.0}})), NotHermitian);
  EXPECT_THROW(hermitian_eig(CMatrix(2, 3)), DimMismatch);
  EXPECT_THROW(hermitian_eig(CMatrix::identity(65)), SizeError);
}

TEST(HermitianEig, MatchesEigenOnRandomInputs) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 32u}) {
    const CMatrix h = testing::random_hermitian(rng, n);
    const auto eig = hermitian_eig(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(testing::to_eigen(h));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(eig.values[i], oracle.eigenvalues()(i), 1e-10) << "n=" << n;

    // Reconstruction V diag(values) V^dagger.
    const CMatrix rebuilt = eig.vectors * CMatrix::diagonal(std::span<const double>(eig.values)) * eig.vectors.adjoint();
    EXPECT_LT(max_diff(rebuilt, h), 1e-10) << "n=" << n;
    EXPECT_LT(max_diff(eig.vectors.adjoint() * eig.vectors, CMatrix::identity(n)), 1e-12);
  }
}

TEST(HermitianEig, DegenerateSpectrum) {
  // A projector of rank 2 in dimension 4 with a non-trivial basis.
  const CVector u = CVector{1.0, 0.0, 0.0, 1.0}.normalized();
  const CVector v = CVector{0.0, 1.0, Complex(0.0, 1.0), 0.0}.normalized();
  const CMatrix p = CMatrix::outer(u, u) + CMatrix::outer(v, v);
  const auto eig = hermitian_eig(p);
  EXPECT_NEAR(eig.values[0], 0.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 0.0, 1e-14);
  EXPECT_NEAR(eig.values[2], 1.0, 1e-14);
  EXPECT_NEAR(eig.values[3], 1.0, 1e-14);
}

TEST(PsdSqrt, Identity) { EXPECT_LT(max_diff(psd_sqrt(CMatrix::identity(3)), CMatrix::identity(3)), 1e-15); }

TEST(PsdSqrt, Diagonal) {
  EXPECT_LT(max_diff(psd_sqrt(CMatrix({{4.0, 0.0}, {0.0, 9.0}})), CMatrix({{2.0, 0.0}, {0.0, 3.0}})), 1e-15);
}

TEST(PsdSqrt, SquaresBack) {
  std::mt19937_64 rng(5);
  const CMatrix a = testing::random_matrix(rng, 6, 6);
  const CMatrix m = a.adjoint() * a;
  const CMatrix s = psd_sqrt(m);
  EXPECT_LT(max_diff(s * s, m), 1e-10);
  EXPECT_LT(hermiticity_defect(s), 1e-12);
}

TEST(PsdSqrt, RejectsNegative) { EXPECT_THROW(psd_sqrt(CMatrix({{1.0, 0.0}, {0.0, -1.0}})), NotPSD); }

TEST(Svd, Identity) {
  const auto d = svd(CMatrix::identity(3));
  for (double s : d.s) EXPECT_NEAR(s, 1.0, 1e-15);
}

TEST(Svd, DampingEffect) {
  const double gamma = 0.2;
  const auto d = svd(damping_a1(gamma));
  ASSERT_EQ(d.s.size(), 2u);
  EXPECT_NEAR(d.s[0], std::sqrt(gamma), 1e-15);
  EXPECT_NEAR(d.s[1], 0.0, 1e-15);
}

TEST(Svd, MatchesEigenAndReconstructs) {
  std::mt19937_64 rng(99);
  for (auto [rows, cols] : {std::pair{4u, 4u}, std::pair{16u, 2u}, std::pair{2u, 16u}, std::pair{7u, 3u}}) {
    const CMatrix m = testing::random_matrix(rng, rows, cols);
    const auto d = svd(m);
    Eigen::JacobiSVD<Eigen::MatrixXcd> oracle(testing::to_eigen(m));
    const std::size_t k = std::min(rows, cols);
    ASSERT_EQ(d.s.size(), k);
    for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(d.s[i], oracle.singularValues()(i), 1e-10);
    CMatrix rebuilt = d.u * CMatrix::diagonal(std::span<const double>(d.s)) * d.v.adjoint();
    EXPECT_LT(max_diff(rebuilt, m), 1e-10);
    EXPECT_LT(max_diff(d.u.adjoint() * d.u, CMatrix::identity(k)), 1e-12);
    EXPECT_LT(max_diff(d.v.adjoint() * d.v, CMatrix::identity(k)), 1e-12);
  }
}

TEST(Svd, RankDeficientStillHasOrthonormalFactors) {
  CMatrix m(4, 2);
  m(0, 0) = 1.0;  // rank 1
  const auto d = svd(m);
  EXPECT_NEAR(d.s[1], 0.0, 1e-15);
  EXPECT_LT(max_diff(d.u.adjoint() * d.u, CMatrix::identity(2)), 1e-12);
}

TEST(OperatorNorm, Basics) {
  EXPECT_EQ(operator_norm(CMatrix(3, 3)), 0.0);
  EXPECT_NEAR(operator_norm(gates::y_rotation(0.37)), 1.0, 1e-15);
  EXPECT_NEAR(operator_norm(CMatrix({{3.0, 0.0}, {0.0, -5.0}})), 5.0, 1e-14);
}

TEST(OrthonormalCompletion, FillsTheSpace) {
  const CVector u = CVector{1.0, 1.0, 0.0, 0.0}.normalized();
  const CMatrix partial = CMatrix::from_columns(std::vector<CVector>{u});
  const CMatrix full = orthonormal_completion(partial, 4);
  ASSERT_EQ(full.cols(), 4u);
  EXPECT_LT(max_diff(full.adjoint() * full, CMatrix::identity(4)), 1e-14);
  EXPECT_LT((full.column(0) - u).norm(), 1e-15);
  EXPECT_THROW(orthonormal_completion(partial, 5), DimMismatch);
}

TEST(TraceOutQubit, ProductState) {
  const CMatrix a({{0.25, 0.0}, {0.0, 0.75}});
  const CMatrix b({{0.5, 0.5}, {0.5, 0.5}});
  const CMatrix rho = tensor_product(a, b);
  EXPECT_LT(max_diff(trace_out_qubit(rho, 2, 1), a), 1e-15);
  EXPECT_LT(max_diff(trace_out_qubit(rho, 2, 0), b), 1e-15);
  EXPECT_THROW(trace_out_qubit(rho, 2, 2), DimMismatch);
}

TEST(Shapes, MismatchesThrow) {
  EXPECT_THROW(CMatrix(2, 3) * CMatrix(2, 3), DimMismatch);
  EXPECT_THROW(CMatrix(2, 2) + CMatrix(3, 3), DimMismatch);
  EXPECT_THROW(CMatrix(2, 3).trace(), DimMismatch);
  EXPECT_THROW(CVector(3).normalized(), NotNormalized);
  EXPECT_THROW(inner(CVector(2), CVector(3)), DimMismatch);
}

TEST(Gates, RotationMatchesExponential) {
  const double angle = 0.61;
  // exp(i angle sigma_y) = cos(angle) I + i sin(angle) sigma_y
  const CMatrix expected = std::cos(angle) * CMatrix::identity(2) + Complex(0.0, std::sin(angle)) * gates::pauli_y();
  EXPECT_LT(max_diff(gates::y_rotation(angle), expected), 1e-15);
}

TEST(Gates, CnotPermutesBasis) {
  const CMatrix c = gates::cnot(0, 1, 2);
  EXPECT_EQ(c(3, 2), Complex(1.0));
  EXPECT_EQ(c(2, 3), Complex(1.0));
  EXPECT_EQ(c(0, 0), Complex(1.0));
  EXPECT_THROW(gates::cnot(1, 1, 2), DimMismatch);
}

}  // namespace
}  // namespace aqec
