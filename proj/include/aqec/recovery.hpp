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

#ifndef AQEC_RECOVERY_HPP
#define AQEC_RECOVERY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "aqec/analyzer.hpp"
#include "aqec/channel.hpp"
#include "aqec/code_space.hpp"
#include "aqec/linalg.hpp"

namespace aqec {

/// R_k maps the physical space onto logical coordinates (d x D).
struct ReversalOp {
  std::string index;
  CMatrix R;
};

/// Measure the projectors W_k W_k^dagger, then undo W_k. Whatever lands in
/// the complement P_E is a heralded failure.
class RecoveryChannel {
 public:
  RecoveryChannel(std::vector<ReversalOp> ops, CMatrix error_projector);

  const std::vector<ReversalOp>& reversal_ops() const { return ops_; }
  const CMatrix& error_projector() const { return error_projector_; }
  std::size_t physical_dim() const { return error_projector_.rows(); }
  std::size_t logical_dim() const { return ops_.empty() ? 0 : ops_.front().R.rows(); }

  /// || sum R_k^dagger R_k + P_E^dagger P_E - I ||
  double completeness_defect() const;

 private:
  std::vector<ReversalOp> ops_;
  CMatrix error_projector_;
};

/// R_k = W_k^dagger for every analysed effect with p > tol.rank;
/// P_E = I - sum W_k W_k^dagger. Throws OrthogonalityViolation when two
/// polar isometries overlap by more than tol.eig.
RecoveryChannel canonical_recovery(std::span<const EffectAnalysis> analyses, const CodeSpace& code);

/// Selects the reversible subset at order t and builds its canonical recovery.
RecoveryChannel build_canonical_recovery(const KrausChannel& channel, const CodeSpace& code, double gamma, int t);

struct RecoveryOutput {
  DensityMatrix logical;  // subnormalized by the failure weight
  double failure_weight = 0.0;
};

RecoveryOutput apply_recovery(const RecoveryChannel& rec, const DensityMatrix& rho);

/// <psi| R(E(|psi_L><psi_L|)) |psi> for logical amplitudes psi.
double recovery_fidelity(const CodeSpace& code, const KrausChannel& channel, const RecoveryChannel& rec,
                         std::span<const Complex> amplitudes);

struct WorstCase {
  double f_min = 1.0;
  std::vector<Complex> argmin;  // logical amplitudes
};

/// Minimizes a qubit fidelity functional over the Bloch sphere,
/// a = cos(t/2), b = e^{i p} sin(t/2): 32 x 64 grid (both poles included)
/// followed by pattern-search refinement down to 1e-10 in angle.
WorstCase minimize_over_bloch_sphere(const std::function<double(Complex, Complex)>& fidelity);

/// Deterministic random-restart minimization over unit vectors of C^d.
WorstCase minimize_over_unit_sphere(const std::function<double(const CVector&)>& fidelity, std::size_t dim,
                                    std::uint64_t seed = 0x5eedULL);

struct WorstCaseOptions {
  bool allow_random_restart = false;
};

/// Worst-case fidelity of `rec` after `channel` over all code inputs. Logical
/// qubits use the Bloch-sphere search; larger logical spaces throw
/// UnsupportedDim unless random restarts are allowed.
WorstCase worst_case_fidelity(const CodeSpace& code, const KrausChannel& channel, const RecoveryChannel& rec,
                              const WorstCaseOptions& options = {});

}  // namespace aqec

#endif  // AQEC_RECOVERY_HPP
