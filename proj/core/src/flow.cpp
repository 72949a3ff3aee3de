// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#include "holoflow/flow.hpp"

#include <cmath>

#include "holoflow/errors.hpp"
#include "holoflow/linalg.hpp"

namespace holoflow {

namespace {

void check_shapes(const SkewHermitianMatrix& h, const OrthoProjector& p0) {
  if (h.dim() != p0.dim()) throw ShapeError("flow: H and P0 dimension mismatch");
}

void check_config(const FlowConfig& cfg) {
  if (cfg.steps < 1) throw ShapeError("flow config: steps must be >= 1");
  if (cfg.stride < 1 || cfg.steps % cfg.stride != 0)
    throw ShapeError("flow config: stride must divide steps");
}

void push_sample(Trajectory& traj, double t, ComplexMatrix p) {
  traj.dist_to_start.push_back(
      traj.samples.empty() ? 0.0 : (p - traj.samples.front()).frobenius_norm());
  traj.times.push_back(t);
  traj.samples.push_back(std::move(p));
}

}  // namespace

OrthoProjector exact_flow(const SkewHermitianMatrix& h,
                          const OrthoProjector& p0, double t) {
  check_shapes(h, p0);
  if (t == 0.0) return p0;
  ComplexMatrix u = expm(cplx(t) * h.matrix());
  return OrthoProjector::create(u * p0.matrix() * u.adjoint(), p0.rank(), 1e-9);
}

Trajectory integrate_rk4(const SkewHermitianMatrix& h,
                         const OrthoProjector& p0, const FlowConfig& cfg) {
  check_shapes(h, p0);
  check_config(cfg);
  const ComplexMatrix& hm = h.matrix();
  double dt = 1.0 / static_cast<double>(cfg.steps);

  Trajectory traj;
  traj.rank = p0.rank();
  push_sample(traj, 0.0, p0.matrix());

  ComplexMatrix p = p0.matrix();
  for (std::size_t step = 1; step <= cfg.steps; ++step) {
    ComplexMatrix k1 = commutator(hm, p);
    ComplexMatrix k2 = commutator(hm, p + cplx(0.5 * dt) * k1);
    ComplexMatrix k3 = commutator(hm, p + cplx(0.5 * dt) * k2);
    ComplexMatrix k4 = commutator(hm, p + cplx(dt) * k3);
    p += cplx(dt / 6.0) * (k1 + cplx(2.0) * k2 + cplx(2.0) * k3 + k4);
    if (step % cfg.stride == 0) {
      ComplexMatrix sample = cfg.retraction ? retract_to_projector(p) : p;
      push_sample(traj, step * dt, std::move(sample));
    }
  }
  return traj;
}

Trajectory sample_exact_flow(const SkewHermitianMatrix& h,
                             const OrthoProjector& p0, const FlowConfig& cfg) {
  check_shapes(h, p0);
  check_config(cfg);
  Trajectory traj;
  traj.rank = p0.rank();
  push_sample(traj, 0.0, p0.matrix());
  for (std::size_t step = cfg.stride; step <= cfg.steps; step += cfg.stride) {
    double t = static_cast<double>(step) / static_cast<double>(cfg.steps);
    push_sample(traj, t, exact_flow(h, p0, t).matrix());
  }
  return traj;
}

double closure_residual(const SkewHermitianMatrix& h, const OrthoProjector& p0) {
  return (exact_flow(h, p0, 1.0).matrix() - p0.matrix()).frobenius_norm();
}

UnitaryMatrix loop_monodromy(const SkewHermitianMatrix& h, const Frame& f0) {
  OrthoProjector p0 = OrthoProjector::from_frame(f0);
  double res = closure_residual(h, p0);
  if (res > 1e-6)
    throw LoopNotClosed("loop_monodromy: trajectory not closed, restriction undefined");
  const ComplexMatrix& f = f0.matrix();
  return UnitaryMatrix::create(f.adjoint() * expm(h.matrix()) * f, 1e-9);
}

TrajectoryStats trajectory_stats(const Trajectory& traj) {
  if (traj.samples.size() < 2)
    throw ShapeError("trajectory_stats: need at least 2 samples");
  TrajectoryStats st;
  double rank = static_cast<double>(traj.rank);
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const ComplexMatrix& p = traj.samples[k];
    double d = traj.dist_to_start[k];
    if (d > st.max_distance) st.max_distance = d;
    double idem = (p * p - p).frobenius_norm();
    double herm = (p - p.adjoint()).frobenius_norm();
    double tr = std::abs(p.trace() - cplx(rank));
    if (idem > st.max_idempotency_drift) st.max_idempotency_drift = idem;
    if (herm > st.max_hermiticity_drift) st.max_hermiticity_drift = herm;
    if (tr > st.max_trace_drift) st.max_trace_drift = tr;
  }
  st.closure = traj.dist_to_start.back();
  return st;
}

ComplexMatrix retract_to_projector(const ComplexMatrix& p) {
  HermitianEig eig = hermitian_eig(hermitian_part(p));
  std::size_t n = p.rows();
  std::vector<cplx> snapped(n);
  for (std::size_t k = 0; k < n; ++k)
    snapped[k] = eig.values[k] >= 0.5 ? 1.0 : 0.0;
  const ComplexMatrix& v = eig.vectors.matrix();
  return v * ComplexMatrix::diagonal(snapped) * v.adjoint();
}

}  // namespace holoflow
