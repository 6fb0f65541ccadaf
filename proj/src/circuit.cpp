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

#include "aqec/circuit.hpp"

#include <cmath>
#include <numbers>

#include "aqec/code_space.hpp"
#include "aqec/errors.hpp"
#include "aqec/gates.hpp"
#include "aqec/tolerances.hpp"

namespace aqec {

namespace {

// Qubit positions inside the (1,3) register and the (qubit, ancilla) pair.
constexpr std::size_t kFirst = 0;
constexpr std::size_t kThird = 1;
constexpr std::size_t kAncilla = 1;

const CMatrix& syndrome_unitary() {
  static const CMatrix u = gates::cnot(2, 3, 4) * gates::cnot(0, 1, 4);
  return u;
}

// Splits an unnormalized state into (normalized state, weight); zero
// operators stay zero.
DensityMatrix normalized(const CMatrix& rho, double& weight) {
  weight = std::max(rho.trace().real(), 0.0);
  if (weight == 0.0) return DensityMatrix(CMatrix(rho.rows(), rho.cols()));
  return DensityMatrix((1.0 / weight) * rho);
}

}  // namespace

std::pair<CMatrix, CMatrix> distortion_removal_kraus(double gamma) {
  CMatrix n0({{0.0, 1.0}, {1.0 - gamma, 0.0}});
  CMatrix n1({{0.0, 0.0}, {std::sqrt(gamma * (2.0 - gamma)), 0.0}});
  return {std::move(n0), std::move(n1)};
}

std::vector<BranchOutcome> syndrome_measure(const CVector& state) {
  if (state.dim() != 16) throw DimMismatch("syndrome measurement acts on four qubits");
  if (std::abs(state.squared_norm() - 1.0) > tolerances().tp) throw NotNormalized("syndrome input is not normalized");
  const CVector mixed = syndrome_unitary() * state;

  std::vector<BranchOutcome> out;
  for (const Syndrome s : {Syndrome{0, 0}, Syndrome{1, 0}, Syndrome{0, 1}, Syndrome{1, 1}}) {
    CVector survivors(4);
    for (std::size_t n1 = 0; n1 < 2; ++n1)
      for (std::size_t n3 = 0; n3 < 2; ++n3) {
        const std::size_t index = (n1 << 3) | (static_cast<std::size_t>(s.m2) << 2) | (n3 << 1) |
                                  static_cast<std::size_t>(s.m4);
        survivors[(n1 << 1) | n3] = mixed[index];
      }
    BranchOutcome branch;
    branch.syndrome = s;
    branch.post_state = normalized(CMatrix::outer(survivors, survivors), branch.probability);
    branch.flag = (s.m2 == 1 && s.m4 == 1) ? BranchFlag::heralded_failure : BranchFlag::success;
    out.push_back(std::move(branch));
  }
  return out;
}

// ---------------------------------------------------------------------------
// FourBitCircuit

FourBitCircuit::FourBitCircuit(double gamma)
    : gamma_(gamma), channel_(identity_channel(1)) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("circuit recovery needs 0 <= gamma < 1");
  channel_ = tensor_power_channel(amplitude_damping_kraus(gamma), 4);

  using namespace gates;
  const double theta = std::atan((1.0 - gamma) * (1.0 - gamma));
  const CMatrix rotate = controlled(y_rotation(theta), kFirst, kThird, 2, 0) *
                         controlled(y_rotation(std::numbers::pi / 4), kFirst, kThird, 2, 1);
  no_loss_unitary_ = rotate * cnot(kThird, kFirst, 2);

  const double theta_prime = std::acos(1.0 - gamma);
  removal_unitary_ = controlled(y_rotation(theta_prime), 0, kAncilla, 2, 1) * on_qubit(pauli_x(), 0, 2);
}

std::pair<CMatrix, CMatrix> FourBitCircuit::distortion_removal_gadget() const {
  std::pair<CMatrix, CMatrix> out{CMatrix(2, 2), CMatrix(2, 2)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      out.first(i, j) = removal_unitary_(2 * i + 0, 2 * j);
      out.second(i, j) = removal_unitary_(2 * i + 1, 2 * j);
    }
  return out;
}

DensityMatrix FourBitCircuit::removal_branch(const CMatrix& rho13, std::size_t distorted, bool success,
                                             double& weight) const {
  const CMatrix qubit = trace_out_qubit(rho13, 2, distorted == kFirst ? kThird : kFirst);
  CMatrix ancilla_zero(2, 2);
  ancilla_zero(0, 0) = 1.0;
  const CMatrix joint = removal_unitary_ * tensor_product(qubit, ancilla_zero) * removal_unitary_.adjoint();
  const CMatrix keep = gates::projector(kAncilla, success ? 0 : 1, 2);
  return normalized(trace_out_qubit(keep * joint * keep, 2, kAncilla), weight);
}

std::vector<BranchOutcome> FourBitCircuit::branch_recovery(const BranchOutcome& measured) const {
  const CMatrix& rho = measured.post_state.matrix();
  if (rho.rows() != 4) throw DimMismatch("branch recovery expects the two surviving qubits");
  const Syndrome s = measured.syndrome;
  std::vector<BranchOutcome> out;

  if (s == Syndrome{0, 0}) {
    const CMatrix rotated = no_loss_unitary_ * rho * no_loss_unitary_.adjoint();
    BranchOutcome done{s, 0.0, DensityMatrix(CMatrix(2, 2)), BranchFlag::success};
    double weight = 0.0;
    done.post_state = normalized(trace_out_qubit(rotated, 2, kThird), weight);
    done.probability = measured.probability * weight;
    out.push_back(std::move(done));
  } else if (s == Syndrome{1, 0} || s == Syndrome{0, 1}) {
    const std::size_t distorted = s.m2 == 1 ? kThird : kFirst;
    for (bool success : {true, false}) {
      double weight = 0.0;
      DensityMatrix state = removal_branch(rho, distorted, success, weight);
      out.push_back({s, measured.probability * weight, std::move(state),
                     success ? BranchFlag::success : BranchFlag::heralded_failure});
    }
  } else {
    double weight = 0.0;
    DensityMatrix state = normalized(trace_out_qubit(rho, 2, kThird), weight);
    out.push_back({s, measured.probability * weight, std::move(state), BranchFlag::heralded_failure});
  }
  return out;
}

FourBitCircuit::Run FourBitCircuit::run(Complex a, Complex b) const {
  static const CodeSpace code = four_bit_code();
  const CVector logical{a, b};
  const CVector encoded = encode(code, logical.entries());

  Run result;
  result.success_state = CMatrix(2, 2);
  for (const auto& e : channel_.effects()) {
    const CVector damped = e.matrix * encoded;
    const double weight = damped.squared_norm();
    if (weight == 0.0) continue;
    for (const auto& branch : syndrome_measure((1.0 / std::sqrt(weight)) * damped)) {
      if (branch.probability == 0.0) continue;
      for (const auto& piece : branch_recovery(branch)) {
        const double p = weight * piece.probability;
        if (piece.flag == BranchFlag::success) {
          result.success_state += p * piece.post_state.matrix();
        } else {
          result.failure_weight += p;
        }
      }
    }
  }
  result.fidelity = inner(logical, result.success_state * logical).real();
  return result;
}

std::vector<BranchOutcome> branch_recovery(const BranchOutcome& measured, double gamma) {
  return FourBitCircuit(gamma).branch_recovery(measured);
}

WorstCase circuit_worst_case(double gamma) {
  const FourBitCircuit circuit(gamma);
  return minimize_over_bloch_sphere([&](Complex a, Complex b) { return circuit.run(a, b).fidelity; });
}

double circuit_fidelity(double gamma) { return circuit_worst_case(gamma).f_min; }

}  // namespace aqec
