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

#include "aqec/code_space.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "aqec/errors.hpp"
#include "aqec/gates.hpp"
#include "aqec/tolerances.hpp"

namespace aqec {

std::string basis_label(std::size_t index, std::size_t num_qubits) {
  std::string label(num_qubits, '0');
  for (std::size_t q = 0; q < num_qubits; ++q)
    if ((index >> (num_qubits - 1 - q)) & 1U) label[q] = '1';
  return label;
}

std::size_t basis_index(const std::string& label) {
  std::size_t index = 0;
  for (char ch : label) {
    if (ch != '0' && ch != '1') throw DomainError("basis label '" + label + "' is not a bit string");
    index = (index << 1) | static_cast<std::size_t>(ch == '1');
  }
  return index;
}

// ---------------------------------------------------------------------------
// CodeSpace

CodeSpace::CodeSpace(std::string label, CMatrix isometry) : CodeSpace(std::move(label), std::move(isometry), true) {}

CodeSpace::CodeSpace(std::string label, CMatrix isometry, bool require_orthonormal)
    : label_(std::move(label)), isometry_(std::move(isometry)) {
  if (isometry_.cols() == 0 || isometry_.rows() < isometry_.cols()) {
    throw DimMismatch("code isometry must be D x d with 1 <= d <= D");
  }
  if (isometry_.rows() > kMaxDim) throw SizeError("physical dimension exceeds " + std::to_string(kMaxDim));
  orthonormality_defect_ = max_abs(gram() - CMatrix::identity(logical_dim()));
  if (require_orthonormal && !is_orthonormal()) {
    throw NotNormalized("codewords of '" + label_ + "' are not orthonormal (defect " +
                        std::to_string(orthonormality_defect_) + ")");
  }
}

CodeSpace CodeSpace::audited(std::string label, CMatrix isometry) {
  return CodeSpace(std::move(label), std::move(isometry), false);
}

CodeSpace CodeSpace::from_terms(std::string label, std::size_t num_qubits,
                                const std::vector<std::vector<BasisTerm>>& codewords, bool require_orthonormal) {
  if (num_qubits == 0 || (std::size_t{1} << num_qubits) > kMaxDim) {
    throw SizeError("qubit count must be between 1 and 6");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<CVector> columns;
  for (const auto& terms : codewords) {
    CVector v(dim);
    for (const auto& term : terms) {
      if (term.basis.size() != num_qubits) {
        throw DomainError("basis label '" + term.basis + "' does not have " + std::to_string(num_qubits) + " bits");
      }
      v[basis_index(term.basis)] += term.amplitude;
    }
    if (v.norm() == 0.0) throw NotNormalized("codeword " + std::to_string(columns.size()) + " is the zero vector");
    columns.push_back(v.normalized());
  }
  if (columns.empty()) throw DomainError("a code needs at least one codeword");
  return CodeSpace(std::move(label), CMatrix::from_columns(columns), require_orthonormal);
}

std::size_t CodeSpace::num_qubits() const {
  const std::size_t dim = physical_dim();
  if (dim == 0 || (dim & (dim - 1)) != 0) return 0;
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

bool CodeSpace::is_orthonormal() const { return orthonormality_defect_ <= tolerances().eig; }

// ---------------------------------------------------------------------------
// Built-in codes

CodeSpace four_bit_code() {
  return CodeSpace::from_terms("four-bit", 4,
                               {{{"0000", 1.0}, {"1111", 1.0}},  //
                                {{"0011", 1.0}, {"1100", 1.0}}});
}

CodeSpace five_bit_code() {
  // Signs as printed; amplitudes become 1/sqrt(8) after normalization.
  const std::vector<std::vector<BasisTerm>> printed = {
      {{"00000", 1.0}, {"11000", 1.0}, {"10011", -1.0}, {"01111", -1.0},
       {"11010", 1.0}, {"00110", 1.0}, {"01101", 1.0}, {"10101", 1.0}},
      {{"11111", 1.0}, {"00011", -1.0}, {"01100", 1.0}, {"10000", -1.0},
       {"00101", -1.0}, {"11010", 1.0}, {"10010", 1.0}, {"01010", -1.0}},
  };
  return CodeSpace::from_terms("five-bit-printed", 5, printed, /*require_orthonormal=*/false);
}

CodeSpace five_bit_perfect_code() {
  const std::vector<std::pair<const char*, double>> zero = {
      {"00000", 1.0},  {"10010", 1.0},  {"01001", 1.0},  {"10100", 1.0},  {"01010", 1.0},  {"11011", -1.0},
      {"00110", -1.0}, {"11000", -1.0}, {"11101", -1.0}, {"00011", -1.0}, {"11110", -1.0}, {"01111", -1.0},
      {"10001", -1.0}, {"01100", -1.0}, {"10111", -1.0}, {"00101", 1.0},
  };
  std::vector<BasisTerm> zero_terms;
  std::vector<BasisTerm> one_terms;
  for (const auto& [label, sign] : zero) {
    std::string flipped = label;
    for (char& ch : flipped) ch = ch == '0' ? '1' : '0';
    zero_terms.push_back({label, sign});
    one_terms.push_back({flipped, sign});
  }
  return CodeSpace::from_terms("five-bit-perfect", 5, {zero_terms, one_terms});
}

CVector encode(const CodeSpace& code, std::span<const Complex> amplitudes) {
  if (amplitudes.size() != code.logical_dim()) {
    throw DimMismatch("expected " + std::to_string(code.logical_dim()) + " logical amplitudes");
  }
  CVector logical(std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
  if (std::abs(logical.squared_norm() - 1.0) > tolerances().tp) {
    throw NotNormalized("logical amplitudes are not normalized");
  }
  return code.isometry() * logical;
}

CMatrix encoder_unitary() {
  using namespace gates;
  constexpr std::size_t n = 4;
  CMatrix u = on_qubit(y_rotation(-std::numbers::pi / 4), 0, n);  // exp(-i pi sigma_y / 4)
  u = cnot(2, 3, n) * u;
  u = cnot(0, 1, n) * u;
  u = cnot(0, 2, n) * u;
  u = cnot(0, 3, n) * u;
  return u;
}

CVector encoder_circuit(Complex a, Complex b) {
  const CVector input{a, b};
  if (std::abs(input.squared_norm() - 1.0) > tolerances().tp) throw NotNormalized("input qubit is not normalized");
  const CVector zero = CVector::basis(2, 0);
  const CVector wires = tensor_product(tensor_product(tensor_product(zero, zero), input), zero);
  return encoder_unitary() * wires;
}

// ---------------------------------------------------------------------------
// Bosonic specifications

int QuasiClassicalState::total_excitations() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

void BosonicCodeSpec::validate() const {
  if (codewords.empty()) throw DomainError("bosonic spec has no codewords");
  for (std::size_t l = 0; l < codewords.size(); ++l) {
    const auto& states = codewords[l].states;
    if (states.empty()) throw DomainError("codeword " + std::to_string(l) + " has no terms");
    double total = 0.0;
    for (const auto& qcs : states) {
      if (qcs.occupations.size() != mode_count) {
        throw DomainError("occupation row of codeword " + std::to_string(l) + " has the wrong length");
      }
      if (qcs.weight < 0.0) throw DomainError("negative weight in codeword " + std::to_string(l));
      for (int n : qcs.occupations)
        if (n < 0) throw DomainError("negative occupation in codeword " + std::to_string(l));
      total += qcs.weight;
    }
    if (std::abs(total - 1.0) > tolerances().tp) {
      throw DomainError("weights of codeword " + std::to_string(l) + " sum to " + std::to_string(total));
    }
  }
}

BosonicCodeSpec qubit_code_to_bosonic_spec(const CodeSpace& code) {
  const std::size_t n = code.num_qubits();
  if (n == 0) throw DomainError("code is not a qubit code");
  BosonicCodeSpec spec;
  spec.mode_count = n;
  for (std::size_t l = 0; l < code.logical_dim(); ++l) {
    const CVector word = code.codeword(l);
    BosonicCodeword out;
    for (std::size_t i = 0; i < word.dim(); ++i) {
      const double weight = std::norm(word[i]);
      if (weight <= 1e-15) continue;
      QuasiClassicalState qcs{weight, std::vector<int>(n)};
      for (std::size_t q = 0; q < n; ++q) qcs.occupations[q] = static_cast<int>((i >> (n - 1 - q)) & 1U);
      out.states.push_back(std::move(qcs));
    }
    spec.codewords.push_back(std::move(out));
  }
  return spec;
}

}  // namespace aqec
