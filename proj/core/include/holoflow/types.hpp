// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holoflow/errors.hpp"
#include "holoflow/matrix.hpp"

namespace holoflow {

// All validation tolerances are relative to the Frobenius norm of the input
// with floor 1.0.
inline double norm_scale(const ComplexMatrix& m) {
  double f = m.frobenius_norm();
  return f > 1.0 ? f : 1.0;
}

/// n x m matrix with orthonormal columns; spans an m-dimensional subspace.
class Frame {
 public:
  /// Throws NotOrthonormal when ||F^dag F - I|| exceeds tol * scale.
  static Frame create(ComplexMatrix columns, double tol = 1e-10);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t ambient_dim() const { return m_.rows(); }
  std::size_t rank() const { return m_.cols(); }

  double orthonormality_residual() const;

 private:
  explicit Frame(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// n x n matrix with M^dag M = I.
class UnitaryMatrix {
 public:
  static UnitaryMatrix create(ComplexMatrix m, double tol = 1e-10);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  explicit UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Hermitian idempotent of trace m; a point of Gr(m, H).
class OrthoProjector {
 public:
  static OrthoProjector create(ComplexMatrix m, std::size_t rank,
                               double tol = 1e-10);
  /// P = F F^dag; rank inherited from the frame.
  static OrthoProjector from_frame(const Frame& f);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  std::size_t rank() const { return rank_; }

 private:
  OrthoProjector(ComplexMatrix m, std::size_t rank)
      : m_(std::move(m)), rank_(rank) {}
  ComplexMatrix m_;
  std::size_t rank_;
};

/// Skew-Hermitian by construction: stores (M - M^dag)/2.
class SkewHermitianMatrix {
 public:
  static SkewHermitianMatrix create(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  explicit SkewHermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Spectral form of a unitary: U = V diag(e^{i lambda_k}) V^dag.
struct SpectralData {
  std::vector<double> phases;  // radians, one per dimension
  UnitaryMatrix vectors;
  std::string branch;  // "principal": phases in (-pi, pi]; "unbounded" otherwise

  ComplexMatrix reconstruct() const;
};

}  // namespace holoflow
