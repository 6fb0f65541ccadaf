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

// Dense complex linear algebra for the small operators (dimension <= 64)
// that appear in code-space analysis. Everything is value-typed; no
// operation mutates its arguments.

#ifndef AQEC_LINALG_HPP
#define AQEC_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace aqec {

using Complex = std::complex<double>;

/// Largest Hilbert-space dimension the library is sized for.
inline constexpr std::size_t kMaxDim = 64;

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : data_(dim) {}
  CVector(std::initializer_list<Complex> entries) : data_(entries) {}
  explicit CVector(std::vector<Complex> entries) : data_(std::move(entries)) {}

  static CVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  std::span<const Complex> entries() const { return data_; }

  double squared_norm() const;
  double norm() const;
  CVector normalized() const;

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(Complex scale);

 private:
  std::vector<Complex> data_;
};

CVector operator+(CVector a, const CVector& b);
CVector operator-(CVector a, const CVector& b);
CVector operator*(Complex scale, CVector v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const CVector& a, const CVector& b);

/// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-by-row literal, e.g. `CMatrix({{1, 0}, {0, 1}})`.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix diagonal(std::span<const Complex> diag);
  static CMatrix diagonal(std::span<const double> diag);
  /// |u><v|
  static CMatrix outer(const CVector& u, const CVector& v);
  /// Matrix whose columns are the given vectors (all of equal dimension).
  static CMatrix from_columns(std::span<const CVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CVector column(std::size_t c) const;
  void set_column(std::size_t c, const CVector& v);

  CMatrix adjoint() const;
  CMatrix transpose() const;
  Complex trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex scale, CMatrix m);
CVector operator*(const CMatrix& m, const CVector& v);

/// Kronecker product; the left factor indexes the most significant digits.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
CVector tensor_product(const CVector& a, const CVector& b);

double frobenius_norm(const CMatrix& m);
/// Largest entry modulus.
double max_abs(const CMatrix& m);
/// ||M - M^dagger||_max
double hermiticity_defect(const CMatrix& m);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column i belongs to values[i]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws NotHermitian when the asymmetry exceeds tol.herm
/// relative to the matrix scale.
EigenDecomposition hermitian_eig(const CMatrix& m);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-tol.psd, 0) are clamped to zero; anything more negative throws NotPSD.
CMatrix psd_sqrt(const CMatrix& m);

struct SingularValueDecomposition {
  CMatrix u;              // rows x k, orthonormal columns
  std::vector<double> s;  // descending, length k = min(rows, cols)
  CMatrix v;              // cols x k, orthonormal columns
};

/// Thin SVD m = u diag(s) v^dagger, computed from the eigendecomposition of
/// m^dagger m. Left vectors of vanishing singular values are completed to an
/// orthonormal set.
SingularValueDecomposition svd(const CMatrix& m);

/// Largest singular value.
double operator_norm(const CMatrix& m);

/// Extends the orthonormal columns of `partial` (n x k) by n-k further
/// orthonormal columns. Deterministic: candidates are tried in computational
/// basis order.
CMatrix orthonormal_completion(const CMatrix& partial, std::size_t total_columns);

/// Traces out qubit `qubit` (0 = most significant) of an n-qubit operator.
CMatrix trace_out_qubit(const CMatrix& rho, std::size_t num_qubits, std::size_t qubit);

}  // namespace aqec

#endif  // AQEC_LINALG_HPP
