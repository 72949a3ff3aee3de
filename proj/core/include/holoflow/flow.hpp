// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "holoflow/types.hpp"

namespace holoflow {

struct FlowConfig {
  std::size_t steps = 200;   // RK4 steps over [0, 1]
  std::size_t stride = 1;    // record every `stride` steps; must divide steps
  bool retraction = false;   // snap samples back onto the Grassmannian
};

/// Sampled projector path over [0, 1]. Samples are stored as raw matrices so
/// integration drift is observable; rank is carried separately.
struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix> samples;
  std::vector<double> dist_to_start;  // Frobenius distance to samples[0]
  std::size_t rank = 0;
};

struct TrajectoryStats {
  double max_distance = 0.0;
  double closure = 0.0;  // distance of the final sample to the start
  double max_idempotency_drift = 0.0;
  double max_hermiticity_drift = 0.0;
  double max_trace_drift = 0.0;
};

/// P(t) = exp(tH) P0 exp(-tH), via the Taylor exponential.
OrthoProjector exact_flow(const SkewHermitianMatrix& h,
                          const OrthoProjector& p0, double t);

/// Classical RK4 on dP/dt = [H, P] over [0, 1].
Trajectory integrate_rk4(const SkewHermitianMatrix& h,
                         const OrthoProjector& p0, const FlowConfig& cfg);

/// Exact flow sampled at steps/stride + 1 uniform times, same layout as the
/// RK4 trajectory.
Trajectory sample_exact_flow(const SkewHermitianMatrix& h,
                             const OrthoProjector& p0, const FlowConfig& cfg);

/// ||exp(H) P0 exp(-H) - P0||_F.
double closure_residual(const SkewHermitianMatrix& h, const OrthoProjector& p0);

/// F0^dag exp(H) F0 -- the monodromy on V0. Throws LoopNotClosed when the
/// closure residual exceeds 1e-6.
UnitaryMatrix loop_monodromy(const SkewHermitianMatrix& h, const Frame& f0);

TrajectoryStats trajectory_stats(const Trajectory& traj);

/// Nearest projector: Hermitian eigendecomposition with eigenvalues snapped
/// to {0, 1} at threshold 1/2.
ComplexMatrix retract_to_projector(const ComplexMatrix& p);

}  // namespace holoflow
