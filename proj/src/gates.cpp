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

#include "aqec/gates.hpp"

#include <cmath>

#include "aqec/errors.hpp"

namespace aqec::gates {

CMatrix pauli_x() { return CMatrix({{0.0, 1.0}, {1.0, 0.0}}); }
CMatrix pauli_y() { return CMatrix({{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}); }
CMatrix pauli_z() { return CMatrix({{1.0, 0.0}, {0.0, -1.0}}); }

CMatrix y_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return CMatrix({{c, s}, {-s, c}});
}

CMatrix on_qubit(const CMatrix& gate, std::size_t qubit, std::size_t num_qubits) {
  if (qubit >= num_qubits) throw DimMismatch("qubit index out of range");
  CMatrix out = CMatrix::identity(1);
  for (std::size_t q = 0; q < num_qubits; ++q)
    out = tensor_product(out, q == qubit ? gate : CMatrix::identity(2));
  return out;
}

CMatrix projector(std::size_t qubit, int value, std::size_t num_qubits) {
  CMatrix p(2, 2);
  p(value, value) = 1.0;
  return on_qubit(p, qubit, num_qubits);
}

CMatrix controlled(const CMatrix& gate, std::size_t control, std::size_t target, std::size_t num_qubits,
                   int control_value) {
  if (control == target) throw DimMismatch("control and target coincide");
  const CMatrix active = projector(control, control_value, num_qubits);
  const CMatrix idle = projector(control, 1 - control_value, num_qubits);
  return idle + active * on_qubit(gate, target, num_qubits);
}

CMatrix cnot(std::size_t control, std::size_t target, std::size_t num_qubits) {
  return controlled(pauli_x(), control, target, num_qubits);
}

}  // namespace aqec::gates
