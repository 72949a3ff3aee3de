// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace holoflow {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. Dimensions up to a few hundred;
/// all algorithms here are plain O(n^3) without blocking.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<cplx>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cplx>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  double one_norm() const;  // max column sum of moduli
  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  /// Copy of column j as a vector.
  std::vector<cplx> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<cplx>& v);

  /// r x c submatrix with top-left corner (i0, j0).
  ComplexMatrix block(std::size_t i0, std::size_t j0, std::size_t r,
                      std::size_t c) const;
  void set_block(std::size_t i0, std::size_t j0, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

/// (M + M^dag) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);
/// (M - M^dag) / 2
ComplexMatrix skew_part(const ComplexMatrix& m);

}  // namespace holoflow
