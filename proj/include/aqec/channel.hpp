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

#ifndef AQEC_CHANNEL_HPP
#define AQEC_CHANNEL_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "aqec/code_space.hpp"
#include "aqec/linalg.hpp"

namespace aqec {

/// One operator of an operator-sum representation, labelled by its error
/// string (qubit 1 leftmost, e.g. "1000" = loss from the first qubit).
struct Effect {
  std::string index;
  CMatrix matrix;
};

class KrausChannel {
 public:
  /// Throws DimMismatch if an effect is not dim x dim, and DomainError if the
  /// channel is flagged trace-preserving but sum A^dagger A deviates from the
  /// identity by more than tol.tp.
  KrausChannel(std::size_t dim, std::vector<Effect> effects, bool trace_preserving = true);

  std::size_t dim() const { return dim_; }
  const std::vector<Effect>& effects() const { return effects_; }
  std::size_t size() const { return effects_.size(); }
  bool is_trace_preserving() const { return trace_preserving_; }

  /// Operator norm of sum A^dagger A - I.
  double completeness_defect() const;
  /// nullptr when no effect carries `index`.
  const Effect* find(const std::string& index) const;

 private:
  std::size_t dim_;
  std::vector<Effect> effects_;
  bool trace_preserving_;
};

/// Coefficients of c_I I + c_X sigma_x + c_Y sigma_y + c_Z sigma_z.
struct PauliDecomposition {
  std::array<Complex, 4> coefficients{};  // I, X, Y, Z

  Complex identity() const { return coefficients[0]; }
  Complex x() const { return coefficients[1]; }
  Complex y() const { return coefficients[2]; }
  Complex z() const { return coefficients[3]; }
  CMatrix reconstruct() const;
};

/// A density operator: square, Hermitian within tol.herm, trace in
/// [0, 1 + tol.tp]. Subnormalized states are allowed so that measurement
/// branches can carry their weight in the trace.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix matrix);
  static DensityMatrix pure(const CVector& psi);

  const CMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }
  double trace() const { return matrix_.trace().real(); }
  /// <psi|rho|psi>
  double expectation(const CVector& psi) const;
  /// Smallest eigenvalue >= -tol.psd.
  bool is_positive() const;

 private:
  CMatrix matrix_;
};

/// Single-qubit amplitude damping: A0 = diag(1, sqrt(1-gamma)),
/// A1 = sqrt(gamma)|0><1|. Throws DomainError unless 0 <= gamma <= 1.
KrausChannel amplitude_damping_kraus(double gamma);

/// Identity channel on `dim` (single effect labelled "I").
KrausChannel identity_channel(std::size_t dim);

PauliDecomposition pauli_decompose(const CMatrix& effect);

/// n-fold tensor power of a qubit channel. Effect labels are the
/// concatenated base labels, qubit 1 leftmost. Throws SizeError when 2^n
/// exceeds kMaxDim.
KrausChannel tensor_power_channel(const KrausChannel& base, std::size_t n);

/// sum_k A_k rho A_k^dagger
DensityMatrix apply_channel(const KrausChannel& channel, const DensityMatrix& rho);

struct EffectOutcome {
  std::string index;
  CVector state;  // A_k|psi>, unnormalized; squared norm is the probability
};

std::vector<EffectOutcome> effect_outcomes(const KrausChannel& channel, const CVector& psi);

/// Largest detection probability of `effect` over the code,
/// i.e. the top eigenvalue of V^dagger A^dagger A V.
double max_detection_probability(const CMatrix& effect, const CodeSpace& code);

/// Effects whose maximum detection probability is at least this multiple of
/// epsilon^t enter the reversible subset.
inline constexpr double kSubsetThreshold = 0.25;

struct ReversibleSubset {
  std::vector<std::string> indices;  // in channel order
  /// min over code states of sum_{n in subset} <psi|A_n^dagger A_n|psi>
  double min_detection_probability = 0.0;
  double threshold = 0.0;
};

/// Selects the effects with maximum detection probability of order
/// epsilon^s, s <= t. Effects with probability at or below tol.rank never
/// qualify.
ReversibleSubset select_reversible_subset(const KrausChannel& channel, const CodeSpace& code, double epsilon,
                                          int t);

/// Smallest eigenvalue of V^dagger (sum_{n in indices} A_n^dagger A_n) V.
double min_detection_probability(const KrausChannel& channel, const CodeSpace& code,
                                 const std::vector<std::string>& indices);

}  // namespace aqec

#endif  // AQEC_CHANNEL_HPP
