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

#include "aqec/channel.hpp"

#include <algorithm>
#include <cmath>

#include "aqec/errors.hpp"
#include "aqec/gates.hpp"
#include "aqec/tolerances.hpp"

namespace aqec {

KrausChannel::KrausChannel(std::size_t dim, std::vector<Effect> effects, bool trace_preserving)
    : dim_(dim), effects_(std::move(effects)), trace_preserving_(trace_preserving) {
  if (dim_ == 0 || dim_ > kMaxDim) throw SizeError("channel dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  if (effects_.empty()) throw DomainError("a channel needs at least one effect");
  for (const auto& e : effects_) {
    if (e.matrix.rows() != dim_ || e.matrix.cols() != dim_) {
      throw DimMismatch("effect '" + e.index + "' is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
    }
  }
  if (trace_preserving_) {
    const double defect = completeness_defect();
    if (defect > tolerances().tp) {
      throw DomainError("channel flagged trace-preserving has completeness defect " + std::to_string(defect));
    }
  }
}

double KrausChannel::completeness_defect() const {
  CMatrix total(dim_, dim_);
  for (const auto& e : effects_) total += e.matrix.adjoint() * e.matrix;
  return operator_norm(total - CMatrix::identity(dim_));
}

const Effect* KrausChannel::find(const std::string& index) const {
  auto it = std::find_if(effects_.begin(), effects_.end(), [&](const Effect& e) { return e.index == index; });
  return it == effects_.end() ? nullptr : &*it;
}

CMatrix PauliDecomposition::reconstruct() const {
  return coefficients[0] * CMatrix::identity(2) + coefficients[1] * gates::pauli_x() +
         coefficients[2] * gates::pauli_y() + coefficients[3] * gates::pauli_z();
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(CMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw DimMismatch("density matrix must be square");
  const double defect = hermiticity_defect(matrix_);
  if (defect > tolerances().herm * std::max(1.0, max_abs(matrix_))) {
    throw NotHermitian("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const double tr = trace();
  if (tr < -tolerances().tp || tr > 1.0 + tolerances().tp) {
    throw DomainError("density matrix trace " + std::to_string(tr) + " outside [0, 1]");
  }
}

DensityMatrix DensityMatrix::pure(const CVector& psi) { return DensityMatrix(CMatrix::outer(psi, psi)); }

double DensityMatrix::expectation(const CVector& psi) const { return inner(psi, matrix_ * psi).real(); }

bool DensityMatrix::is_positive() const {
  if (dim() == 0) return true;
  return hermitian_eig(matrix_).values.front() >= -tolerances().psd;
}

// ---------------------------------------------------------------------------
// Channels

KrausChannel amplitude_damping_kraus(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("damping probability must lie in [0, 1]");
  CMatrix a0({{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}});
  CMatrix a1({{0.0, std::sqrt(gamma)}, {0.0, 0.0}});
  return KrausChannel(2, {{"0", std::move(a0)}, {"1", std::move(a1)}});
}

KrausChannel identity_channel(std::size_t dim) { return KrausChannel(dim, {{"I", CMatrix::identity(dim)}}); }

PauliDecomposition pauli_decompose(const CMatrix& effect) {
  if (effect.rows() != 2 || effect.cols() != 2) throw DimMismatch("Pauli decomposition needs a 2x2 matrix");
  PauliDecomposition out;
  out.coefficients[0] = 0.5 * effect.trace();
  out.coefficients[1] = 0.5 * (gates::pauli_x() * effect).trace();
  out.coefficients[2] = 0.5 * (gates::pauli_y() * effect).trace();
  out.coefficients[3] = 0.5 * (gates::pauli_z() * effect).trace();
  return out;
}

KrausChannel tensor_power_channel(const KrausChannel& base, std::size_t n) {
  if (base.dim() != 2) throw DimMismatch("tensor powers are built from qubit channels");
  if (n == 0) throw DomainError("qubit count must be positive");
  if (n >= 63 || (std::size_t{1} << n) > kMaxDim) {
    throw SizeError("2^" + std::to_string(n) + " exceeds the dimension cap " + std::to_string(kMaxDim));
  }
  std::vector<Effect> effects = base.effects();
  for (std::size_t q = 1; q < n; ++q) {
    std::vector<Effect> next;
    next.reserve(effects.size() * base.size());
    for (const auto& left : effects)
      for (const auto& right : base.effects())
        next.push_back({left.index + right.index, tensor_product(left.matrix, right.matrix)});
    effects = std::move(next);
  }
  return KrausChannel(std::size_t{1} << n, std::move(effects), base.is_trace_preserving());
}

DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.dim()) throw DimMismatch("state and channel dimensions differ");
  CMatrix out(channel.dim(), channel.dim());
  for (const auto& e : channel.effects()) out += e.matrix * rho.matrix() * e.matrix.adjoint();
  return DensityMatrix(std::move(out));
}

std::vector<EffectOutcome> effect_outcomes(const KrausChannel& channel, const CVector& psi) {
  if (psi.dim() != channel.dim()) throw DimMismatch("state and channel dimensions differ");
  std::vector<EffectOutcome> out;
  out.reserve(channel.size());
  for (const auto& e : channel.effects()) out.push_back({e.index, e.matrix * psi});
  return out;
}

double max_detection_probability(const CMatrix& effect, const CodeSpace& code) {
  if (effect.cols() != code.physical_dim()) throw DimMismatch("effect and code dimensions differ");
  const CMatrix image = effect * code.isometry();
  return hermitian_eig(image.adjoint() * image).values.back();
}

double min_detection_probability(const KrausChannel& channel, const CodeSpace& code,
                                 const std::vector<std::string>& indices) {
  if (channel.dim() != code.physical_dim()) throw DimMismatch("channel and code dimensions differ");
  const std::size_t d = code.logical_dim();
  CMatrix total(d, d);
  for (const auto& index : indices) {
    const Effect* e = channel.find(index);
    if (e == nullptr) throw DomainError("channel has no effect '" + index + "'");
    const CMatrix image = e->matrix * code.isometry();
    total += image.adjoint() * image;
  }
  return hermitian_eig(total).values.front();
}

ReversibleSubset select_reversible_subset(const KrausChannel& channel, const CodeSpace& code, double epsilon,
                                          int t) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
  if (t < 0) throw DomainError("order t must be non-negative");
  ReversibleSubset out;
  out.threshold = kSubsetThreshold * std::pow(epsilon, t);
  for (const auto& e : channel.effects()) {
    const double p = max_detection_probability(e.matrix, code);
    if (p > tolerances().rank && p >= out.threshold) out.indices.push_back(e.index);
  }
  out.min_detection_probability = min_detection_probability(channel, code, out.indices);
  return out;
}

}  // namespace aqec
