// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#include "holoflow/types.hpp"

#include <cmath>
#include <complex>

namespace holoflow {

Frame Frame::create(ComplexMatrix columns, double tol) {
  if (columns.rows() == 0 || columns.cols() == 0 ||
      columns.cols() > columns.rows())
    throw ShapeError("frame: need 0 < m <= n");
  if (!columns.is_finite()) throw NotOrthonormal("frame: non-finite entries");
  Frame f(std::move(columns));
  if (f.orthonormality_residual() > tol * norm_scale(f.m_))
    throw NotOrthonormal("frame: columns not orthonormal");
  return f;
}

double Frame::orthonormality_residual() const {
  ComplexMatrix g = m_.adjoint() * m_;
  g -= ComplexMatrix::identity(m_.cols());
  return g.frobenius_norm();
}

UnitaryMatrix UnitaryMatrix::create(ComplexMatrix m, double tol) {
  if (!m.square()) throw ShapeError("unitary: matrix not square");
  if (!m.is_finite()) throw NotUnitary("unitary: non-finite entries");
  ComplexMatrix g = m.adjoint() * m;
  g -= ComplexMatrix::identity(m.rows());
  if (g.frobenius_norm() > tol * norm_scale(m))
    throw NotUnitary("unitary: M^dag M != I");
  return UnitaryMatrix(std::move(m));
}

OrthoProjector OrthoProjector::create(ComplexMatrix m, std::size_t rank,
                                      double tol) {
  if (!m.square()) throw ShapeError("projector: matrix not square");
  double scale = norm_scale(m);
  if ((m - m.adjoint()).frobenius_norm() > tol * scale)
    throw ShapeError("projector: not Hermitian");
  if ((m * m - m).frobenius_norm() > tol * scale)
    throw ShapeError("projector: not idempotent");
  if (std::abs(m.trace() - cplx(static_cast<double>(rank))) > 1e-8 * scale)
    throw ShapeError("projector: trace does not match rank");
  return OrthoProjector(std::move(m), rank);
}

OrthoProjector OrthoProjector::from_frame(const Frame& f) {
  return OrthoProjector(f.matrix() * f.matrix().adjoint(), f.rank());
}

SkewHermitianMatrix SkewHermitianMatrix::create(const ComplexMatrix& m) {
  if (!m.square()) throw ShapeError("skew-hermitian: matrix not square");
  return SkewHermitianMatrix(skew_part(m));
}

ComplexMatrix SpectralData::reconstruct() const {
  std::size_t n = phases.size();
  std::vector<cplx> u(n);
  for (std::size_t k = 0; k < n; ++k)
    u[k] = std::exp(cplx(0.0, phases[k]));
  const ComplexMatrix& v = vectors.matrix();
  return v * ComplexMatrix::diagonal(u) * v.adjoint();
}

}  // namespace holoflow
