// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holoflow/linalg.hpp"
#include "holoflow/types.hpp"

namespace holoflow {

/// Boundary data: a subspace V0 (spanned by `frame`) together with the
/// prescribed unitary restriction g0 in frame coordinates. Requires
/// 0 < m < n; the construction needs at least one complement direction.
class BoundaryProblem {
 public:
  static BoundaryProblem create(Frame frame, UnitaryMatrix g0);

  const Frame& frame() const { return frame_; }
  const UnitaryMatrix& g0() const { return g0_; }
  std::size_t ambient_dim() const { return frame_.ambient_dim(); }
  std::size_t rank() const { return frame_.rank(); }

 private:
  BoundaryProblem(Frame f, UnitaryMatrix g) : frame_(std::move(f)), g0_(std::move(g)) {}
  Frame frame_;
  UnitaryMatrix g0_;
};

/// Coordinates of the solution family: the 2x2 mixing unitary, the winding
/// integer applied to the doubled eigenvalue, and the 1-based pivot index
/// selecting which eigenvalue is doubled (defaults to the last, m).
struct SynthesisParams {
  UnitaryMatrix omega;
  int winding = 0;
  std::optional<std::size_t> pivot;  // 1-based, in [1, m]
};

struct MonodromyReport {
  double proj_residual = 0.0;         // ||exp(H) P0 exp(-H) - P0||_F
  double restriction_residual = 0.0;  // ||F0^dag exp(H) F0 - g0||_F
  double skew_residual = 0.0;         // ||H + H^dag||_F
  double commutator_norm = 0.0;       // ||[H, P0]||_F
  bool nontrivial = false;            // commutator_norm > 1e-8
};

struct SynthesisResult {
  SkewHermitianMatrix h_ambient;
  UnitaryMatrix basis;      // columns e_1..e_n
  ComplexMatrix u_matrix;   // diagonal-with-doubled-entry form, in basis E
  std::vector<double> phases;  // reordered, pivot at position m
  MonodromyReport report;
};

struct BoundaryEig {
  std::vector<double> phases;  // ascending, in (-pi, pi]
  Frame eigenframe;            // ambient n x m, columns inside range(F0)
};

/// Eigendecomposition of g0, lifted to the ambient space: phases sorted
/// ascending, eigenvectors F0 * v_k.
BoundaryEig diagonalize_boundary(const BoundaryProblem& prob);

struct Extension {
  UnitaryMatrix basis;      // n x n, first m columns = reordered eigenframe
  ComplexMatrix u_matrix;   // diag(u_1..u_m, u_m, 1..1) in basis E
  std::vector<double> phases;  // reordered so the pivot sits at position m
};

/// Moves the pivot eigenpair to position m, extends the eigenframe to a full
/// basis, and lays out the doubled-eigenvalue diagonal template.
Extension build_extension(const Frame& eigenframe,
                          const std::vector<double>& phases,
                          const SynthesisParams& params,
                          std::size_t ambient_dim);

/// H in basis E: blockdiag(diag(i l_1..i l_{m-1}), Omega, 0) with
/// Omega = omega diag(i l_m, i(l_m + 2 pi w)) omega^dag.
SkewHermitianMatrix build_generator(const std::vector<double>& phases,
                                    const SynthesisParams& params,
                                    std::size_t ambient_dim);

/// Full pipeline: eigenbasis, extension, generator, conjugation back to the
/// ambient standard basis, and a monodromy report computed with the Taylor
/// exponential.
SynthesisResult synthesize(const BoundaryProblem& prob,
                           const SynthesisParams& params);

/// Residual report for an arbitrary candidate generator (not required to be
/// skew; skew_residual records the defect).
MonodromyReport verify_monodromy(const ComplexMatrix& h,
                                 const BoundaryProblem& prob);

struct Certificate {
  double omega12_abs = 0.0;              // |Omega_12| = 2 pi |w| |w11| |w21|
  bool nontrivial = false;               // |Omega_12| > 1e-12
  double predicted_commutator_norm = 0.0;  // sqrt(2) |Omega_12|, in basis E
};

/// Closed-form non-triviality predicate: Omega is diagonal iff w = 0 or
/// omega does not mix the two components.
Certificate nontriviality_certificate(const SynthesisParams& params,
                                      double lambda_m);

}  // namespace holoflow
