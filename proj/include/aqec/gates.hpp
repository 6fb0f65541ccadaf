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

// Full-register matrices for the handful of gates used by the encoder and
// the syndrome/recovery circuits. Qubit 0 is the most significant bit of the
// basis index, so |q0 q1 ... > reads left to right.

#ifndef AQEC_GATES_HPP
#define AQEC_GATES_HPP

#include <cstddef>

#include "aqec/linalg.hpp"

namespace aqec::gates {

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// exp(i angle sigma_y): |0> -> cos|0> - sin|1>, |1> -> sin|0> + cos|1>.
CMatrix y_rotation(double angle);

/// `gate` acting on `qubit`, identity elsewhere.
CMatrix on_qubit(const CMatrix& gate, std::size_t qubit, std::size_t num_qubits);

/// `gate` on `target` when `control` is in |control_value>.
CMatrix controlled(const CMatrix& gate, std::size_t control, std::size_t target, std::size_t num_qubits,
                   int control_value = 1);

CMatrix cnot(std::size_t control, std::size_t target, std::size_t num_qubits);

/// Projector onto `qubit` being |value>.
CMatrix projector(std::size_t qubit, int value, std::size_t num_qubits);

}  // namespace aqec::gates

#endif  // AQEC_GATES_HPP
