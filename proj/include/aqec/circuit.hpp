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

// Gate-level syndrome extraction and recovery for the four-bit
// amplitude-damping code.
//
// Syndrome: CNOT(1->2), CNOT(3->4), then measure qubits 2 and 4; qubits 1
// and 3 survive. Depending on (M2, M4):
//   (0,0)  CNOT(3->1), then rotate qubit 3 back to |0> with exp(i theta sigma_y)
//          when qubit 1 is |0> (tan theta = (1-gamma)^2) or exp(i pi/4 sigma_y)
//          when it is |1>. Qubit 1 holds the decoded state.
//   (1,0)  qubit 3 carries the distorted state; NOT it, rotate an ancilla by
//          theta' (cos theta' = 1 - gamma) controlled on it, measure the
//          ancilla. Ancilla 0 leaves the decoded state on qubit 3, ancilla 1
//          is a heralded failure.
//   (0,1)  as (1,0) with qubits 1 and 3 exchanging roles.
//   (1,1)  heralded failure.

#ifndef AQEC_CIRCUIT_HPP
#define AQEC_CIRCUIT_HPP

#include <utility>
#include <vector>

#include "aqec/channel.hpp"
#include "aqec/linalg.hpp"
#include "aqec/recovery.hpp"

namespace aqec {

struct Syndrome {
  int m2 = 0;
  int m4 = 0;

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

enum class BranchFlag { success, heralded_failure };

struct BranchOutcome {
  Syndrome syndrome;
  double probability = 0.0;
  /// Normalized state of the surviving qubits (zero when probability is 0):
  /// qubits (1,3) after syndrome measurement, the decoded qubit after
  /// recovery.
  DensityMatrix post_state{CMatrix(1, 1)};
  BranchFlag flag = BranchFlag::success;
};

/// N0 = |0><1| + (1-gamma)|1><0|, N1 = sqrt(gamma(2-gamma)) |1><0|.
std::pair<CMatrix, CMatrix> distortion_removal_kraus(double gamma);

/// The four-bit circuits at a fixed damping strength.
class FourBitCircuit {
 public:
  /// Requires 0 <= gamma < 1.
  explicit FourBitCircuit(double gamma);

  double gamma() const { return gamma_; }

  /// Recovers one measured branch. Returns the success piece and, for the
  /// (1,0)/(0,1) branches, the heralded-failure piece; probabilities are
  /// absolute (they sum to measured.probability).
  std::vector<BranchOutcome> branch_recovery(const BranchOutcome& measured) const;

  /// Effective Kraus pair of the NOT + controlled-rotation + ancilla
  /// measurement gadget, read off its gate-level unitary.
  std::pair<CMatrix, CMatrix> distortion_removal_gadget() const;

  struct Run {
    double fidelity = 0.0;        // <psi|rho_success|psi>
    double failure_weight = 0.0;  // heralded failures, all sources
    CMatrix success_state;        // unnormalized decoded state, 2x2
  };

  /// Encodes a|0_L> + b|1_L>, damps every qubit, and runs syndrome
  /// measurement and branch recovery over every effect.
  Run run(Complex a, Complex b) const;

 private:
  DensityMatrix removal_branch(const CMatrix& rho13, std::size_t distorted, bool success, double& weight) const;

  double gamma_;
  KrausChannel channel_;
  CMatrix no_loss_unitary_;
  CMatrix removal_unitary_;  // on (distorted qubit, ancilla)
};

/// Branches (0,0), (1,0), (0,1), (1,1) in that order, each with the
/// normalized post-measurement state of qubits (1,3). Throws NotNormalized
/// unless `state` is a unit vector of dimension 16.
std::vector<BranchOutcome> syndrome_measure(const CVector& state);

/// FourBitCircuit(gamma).branch_recovery(measured).
std::vector<BranchOutcome> branch_recovery(const BranchOutcome& measured, double gamma);

/// Worst-case fidelity of the full circuit pipeline.
WorstCase circuit_worst_case(double gamma);
double circuit_fidelity(double gamma);

}  // namespace aqec

#endif  // AQEC_CIRCUIT_HPP
