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

#ifndef AQEC_CODE_SPACE_HPP
#define AQEC_CODE_SPACE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aqec/linalg.hpp"

namespace aqec {

/// One computational-basis term of a codeword, e.g. {"0011", 1/sqrt(2)}.
struct BasisTerm {
  std::string basis;
  Complex amplitude;
};

/// A code subspace given by an isometry from the logical space (dimension d)
/// into the physical space (dimension D). Columns are the logical basis
/// states |c_i>.
///
/// Codes are normally required to be orthonormal. `audited()` accepts a
/// non-orthonormal set as-is and records the defect instead; this exists
/// for codewords reproduced verbatim from a source that may contain slips.
class CodeSpace {
 public:
  /// Throws NotNormalized when isometry^dagger isometry != I within tol.eig.
  CodeSpace(std::string label, CMatrix isometry);

  static CodeSpace audited(std::string label, CMatrix isometry);

  /// Builds a code on `num_qubits` qubits from per-codeword basis terms.
  /// Each codeword is normalized; the zero vector is rejected.
  static CodeSpace from_terms(std::string label, std::size_t num_qubits,
                              const std::vector<std::vector<BasisTerm>>& codewords, bool require_orthonormal = true);

  const std::string& label() const { return label_; }
  std::size_t physical_dim() const { return isometry_.rows(); }
  std::size_t logical_dim() const { return isometry_.cols(); }
  /// Number of physical qubits, or 0 when D is not a power of two.
  std::size_t num_qubits() const;
  const CMatrix& isometry() const { return isometry_; }
  CVector codeword(std::size_t i) const { return isometry_.column(i); }
  /// P_C = V V^dagger
  CMatrix projector() const { return isometry_ * isometry_.adjoint(); }

  /// Gram matrix V^dagger V of the stored codewords.
  CMatrix gram() const { return isometry_.adjoint() * isometry_; }
  /// max |V^dagger V - I|
  double orthonormality_defect() const { return orthonormality_defect_; }
  bool is_orthonormal() const;

 private:
  CodeSpace(std::string label, CMatrix isometry, bool require_orthonormal);

  std::string label_;
  CMatrix isometry_;
  double orthonormality_defect_ = 0.0;
};

/// |0_L> = (|0000> + |1111>)/sqrt2, |1_L> = (|0011> + |1100>)/sqrt2.
CodeSpace four_bit_code();

/// The five-qubit codewords exactly as printed in the amplitude-damping
/// literature, uniform amplitude 1/sqrt8 with the printed signs. The printed
/// pair is not orthogonal (both contain |11010>); see `orthonormality_defect`.
CodeSpace five_bit_code();

/// The five-qubit perfect code in its standard sixteen-term form, with
/// |1_L> the bitwise complement of |0_L>.
CodeSpace five_bit_perfect_code();

/// Returns isometry * amplitudes. Throws NotNormalized if the amplitudes are
/// not a unit vector within tol.tp.
CVector encode(const CodeSpace& code, std::span<const Complex> amplitudes);

/// Gate-level encoder for the four-bit code: the input qubit enters on the
/// third wire of |0>|0>|psi>|0>, qubit 1 is rotated by exp(-i pi sigma_y/4),
/// then CNOT(3->4), CNOT(1->2), CNOT(1->3), CNOT(1->4).
CVector encoder_circuit(Complex a, Complex b);

/// The encoder's 16x16 unitary (qubit indices from 0).
CMatrix encoder_unitary();

/// One quasi-classical state of a bosonic codeword: weight mu_i and the
/// excitation count n_ij of each mode.
struct QuasiClassicalState {
  double weight = 0.0;
  std::vector<int> occupations;

  int total_excitations() const;
};

struct BosonicCodeword {
  std::vector<QuasiClassicalState> states;
};

struct BosonicCodeSpec {
  std::size_t mode_count = 0;
  std::vector<BosonicCodeword> codewords;

  /// Throws DomainError on a weight sum off by more than tol.tp, a row of
  /// the wrong length, negative weights, or negative occupations.
  void validate() const;
};

/// Reads weights |amplitude|^2 and bit occupations off each codeword.
BosonicCodeSpec qubit_code_to_bosonic_spec(const CodeSpace& code);

/// Basis label of `index` on `num_qubits` qubits, qubit 1 leftmost.
std::string basis_label(std::size_t index, std::size_t num_qubits);
/// Inverse of basis_label; throws DomainError on characters other than 0/1.
std::size_t basis_index(const std::string& label);

}  // namespace aqec

#endif  // AQEC_CODE_SPACE_HPP
