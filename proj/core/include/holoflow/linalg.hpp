// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "holoflow/matrix.hpp"
#include "holoflow/types.hpp"

namespace holoflow {

/// Modified Gram-Schmidt with one reorthogonalization pass over the columns
/// of `vectors`. Columns whose residual after projection is below
/// tol * max(1, ||column||) are dropped. Throws EmptySpan when nothing
/// survives.
Frame orthonormalize(const ComplexMatrix& vectors, double tol = 1e-8);

/// Extends a partial frame to a full n x n unitary. The first m columns equal
/// the input bit-for-bit; the complement is built from standard basis vectors,
/// pivoting on the largest residual norm at each step.
UnitaryMatrix extend_to_unitary(const Frame& partial);

struct HermitianEig {
  std::vector<double> values;  // ascending
  UnitaryMatrix vectors;
};

/// Cyclic complex Jacobi rotations until the off-diagonal Frobenius norm
/// drops below tol * max(1, ||A||_F). Throws NotHermitian for non-Hermitian
/// input.
HermitianEig hermitian_eig(const ComplexMatrix& a, double tol = 1e-13);

/// Spectral decomposition of a unitary via the two-stage normal-matrix split:
/// diagonalize (U+U^dag)/2, then within each eigenvalue cluster (gap below
/// group_tol) diagonalize the restriction of (U-U^dag)/(2i). Phases are
/// principal values in (-pi, pi].
SpectralData unitary_eig(const UnitaryMatrix& u, double group_tol = 1e-8);

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
/// This is the independent oracle against the spectral route.
ComplexMatrix expm(const ComplexMatrix& m);

/// V diag(e^{i t lambda_k}) V^dag.
UnitaryMatrix expm_spectral(const SpectralData& s, double t = 1.0);

/// Spectral data of exp(H) for skew-Hermitian H, via hermitian_eig of -iH.
/// Phases are the eigenvalues of -iH and may lie outside (-pi, pi].
SpectralData spectral_from_skew(const ComplexMatrix& h);

/// AB - BA. Throws ShapeError on dimension mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace holoflow
