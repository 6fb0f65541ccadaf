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

#include "aqec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "aqec/errors.hpp"
#include "aqec/tolerances.hpp"

namespace aqec {

// ---------------------------------------------------------------------------
// CVector

CVector CVector::basis(std::size_t dim, std::size_t index) {
  CVector v(dim);
  v[index] = 1.0;
  return v;
}

double CVector::squared_norm() const {
  double total = 0.0;
  for (const auto& z : data_) total += std::norm(z);
  return total;
}

double CVector::norm() const { return std::sqrt(squared_norm()); }

CVector CVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NotNormalized("cannot normalize the zero vector");
  CVector out = *this;
  out *= 1.0 / n;
  return out;
}

CVector& CVector::operator+=(const CVector& other) {
  if (other.dim() != dim()) throw DimMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  if (other.dim() != dim()) throw DimMismatch("vector dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVector& CVector::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

CVector operator+(CVector a, const CVector& b) { return a += b; }
CVector operator-(CVector a, const CVector& b) { return a -= b; }
CVector operator*(Complex scale, CVector v) { return v *= scale; }

Complex inner(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw DimMismatch("vector dimensions differ");
  Complex total = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::outer(const CVector& u, const CVector& v) {
  CMatrix m(u.dim(), v.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

CMatrix CMatrix::from_columns(std::span<const CVector> columns) {
  if (columns.empty()) return {};
  CMatrix m(columns.front().dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

CVector CMatrix::column(std::size_t c) const {
  CVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void CMatrix::set_column(std::size_t c, const CVector& v) {
  if (v.dim() != rows_) throw DimMismatch("column length does not match row count");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex CMatrix::trace() const {
  if (!is_square()) throw DimMismatch("trace of a non-square matrix");
  Complex total = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) total += (*this)(i, i);
  return total;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(Complex scale, CMatrix m) { return m *= scale; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimMismatch("matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

CVector operator*(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.dim()) throw DimMismatch("matrix-vector shape mismatch");
  CVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex total = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) total += m(r, c) * v[c];
    out[r] = total;
  }
  return out;
}

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex scale = a(ar, ac);
      if (scale == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = scale * b(br, bc);
    }
  return out;
}

CVector tensor_product(const CVector& a, const CVector& b) {
  CVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

double frobenius_norm(const CMatrix& m) {
  double total = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) total += std::norm(m(r, c));
  return std::sqrt(total);
}

double max_abs(const CMatrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, std::abs(m(r, c)));
  return best;
}

double hermiticity_defect(const CMatrix& m) {
  if (!m.is_square()) throw DimMismatch("Hermiticity of a non-square matrix");
  double worst = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
  return worst;
}

// ---------------------------------------------------------------------------
// Eigensolver

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double total = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) total += std::norm(a(r, c));
  return std::sqrt(total);
}

// Applies the rotation J with J_pp = J_qq = c, J_pq = s e^{i phi},
// J_qp = -s e^{-i phi}, which zeroes a(p, q) of J^dagger a J.
void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  const Complex phase = apq / magnitude;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * magnitude);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex jpp = c;
  const Complex jqq = c;
  const Complex jpq = s * phase;
  const Complex jqp = -s * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const CMatrix& m) {
  if (!m.is_square()) throw DimMismatch("eigendecomposition of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > kMaxDim) throw SizeError("matrix dimension exceeds " + std::to_string(kMaxDim));
  const double scale = max_abs(m);
  const double defect = hermiticity_defect(m);
  if (defect > tolerances().herm * std::max(scale, 1e-300) && defect > 0.0) {
    throw NotHermitian("asymmetry defect " + std::to_string(defect) + " exceeds tolerance");
  }

  CMatrix a = 0.5 * (m + m.adjoint());
  CMatrix v = CMatrix::identity(n);
  const double total = frobenius_norm(a);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= 1e-15 * total || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 1e-300) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenDecomposition out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.set_column(k, v.column(order[k]));
  }
  return out;
}

CMatrix psd_sqrt(const CMatrix& m) {
  const EigenDecomposition eig = hermitian_eig(m);
  const double scale = std::max(1.0, eig.values.empty() ? 0.0 : std::abs(eig.values.back()));
  std::vector<double> roots(eig.values.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double lambda = eig.values[i];
    if (lambda < -tolerances().psd * scale) {
      throw NotPSD("eigenvalue " + std::to_string(lambda) + " is negative");
    }
    roots[i] = std::sqrt(std::max(lambda, 0.0));
  }
  return eig.vectors * CMatrix::diagonal(std::span<const double>(roots)) * eig.vectors.adjoint();
}

// ---------------------------------------------------------------------------
// SVD

CMatrix orthonormal_completion(const CMatrix& partial, std::size_t total_columns) {
  const std::size_t n = partial.rows();
  if (total_columns > n) throw DimMismatch("cannot complete beyond the ambient dimension");
  std::vector<CVector> basis;
  for (std::size_t c = 0; c < partial.cols(); ++c) basis.push_back(partial.column(c));

  auto residual = [&](const CVector& candidate) {
    CVector r = candidate;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) r -= inner(b, r) * b;
    return r;
  };

  while (basis.size() < total_columns) {
    std::size_t best_index = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double norm = residual(CVector::basis(n, i)).norm();
      if (norm > best_norm + 1e-12) {
        best_norm = norm;
        best_index = i;
      }
    }
    basis.push_back(residual(CVector::basis(n, best_index)).normalized());
  }
  return CMatrix::from_columns(basis);
}

SingularValueDecomposition svd(const CMatrix& m) {
  if (m.rows() < m.cols()) {
    SingularValueDecomposition t = svd(m.adjoint());
    return {std::move(t.v), std::move(t.s), std::move(t.u)};
  }
  const std::size_t k = m.cols();
  const EigenDecomposition gram = hermitian_eig(m.adjoint() * m);

  // Descending by recomputed singular value ||m v_i||, which is accurate even
  // where the Gram eigenvalue has lost relative precision.
  struct Pair {
    double s;
    CVector v;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = k; i-- > 0;) {
    CVector vi = gram.vectors.column(i);
    pairs.push_back({(m * vi).norm(), std::move(vi)});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.s > b.s; });

  SingularValueDecomposition out{CMatrix(m.rows(), k), std::vector<double>(k), CMatrix(k, k)};
  const double s_max = pairs.empty() ? 0.0 : pairs.front().s;
  std::vector<CVector> left;
  for (std::size_t i = 0; i < k; ++i) {
    out.s[i] = pairs[i].s;
    out.v.set_column(i, pairs[i].v);
    if (s_max > 0.0 && pairs[i].s > tolerances().rank * s_max) {
      CVector ui = (1.0 / pairs[i].s) * (m * pairs[i].v);
      for (const auto& prev : left) ui -= inner(prev, ui) * prev;
      left.push_back(ui.normalized());
    }
  }
  const CMatrix partial = left.empty() ? CMatrix(m.rows(), 0) : CMatrix::from_columns(left);
  out.u = orthonormal_completion(partial, k);
  return out;
}

double operator_norm(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return svd(m).s.front();
}

CMatrix trace_out_qubit(const CMatrix& rho, std::size_t num_qubits, std::size_t qubit) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (!rho.is_square() || rho.rows() != dim) throw DimMismatch("operator is not on the stated qubit count");
  if (qubit >= num_qubits) throw DimMismatch("qubit index out of range");
  const std::size_t bit = num_qubits - 1 - qubit;
  const std::size_t low_mask = (std::size_t{1} << bit) - 1;
  auto expand = [&](std::size_t i, std::size_t b) {
    return ((i & ~low_mask) << 1) | (b << bit) | (i & low_mask);
  };
  const std::size_t reduced = dim / 2;
  CMatrix out(reduced, reduced);
  for (std::size_t i = 0; i < reduced; ++i)
    for (std::size_t j = 0; j < reduced; ++j)
      out(i, j) = rho(expand(i, 0), expand(j, 0)) + rho(expand(i, 1), expand(j, 1));
  return out;
}

}  // namespace aqec
