// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#include "holoflow/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holoflow/errors.hpp"

namespace holoflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Deterministic order for equal phases: compare eigenvector columns entrywise.
bool column_less(const ComplexMatrix& v, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const cplx& x = v(i, a);
    const cplx& y = v(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

std::size_t resolve_pivot(const SynthesisParams& params, std::size_t m) {
  std::size_t p = params.pivot.value_or(m);
  if (p < 1 || p > m) throw ShapeError("pivot: index out of range [1, m]");
  return p;
}

}  // namespace

BoundaryProblem BoundaryProblem::create(Frame frame, UnitaryMatrix g0) {
  if (frame.rank() >= frame.ambient_dim())
    throw NoRoomForExtension("boundary problem: requires m < n");
  if (g0.dim() != frame.rank())
    throw ShapeError("g0: dimension must equal the frame rank");
  return BoundaryProblem(std::move(frame), std::move(g0));
}

BoundaryEig diagonalize_boundary(const BoundaryProblem& prob) {
  SpectralData spec = unitary_eig(prob.g0());
  std::size_t m = prob.rank();
  const ComplexMatrix& v = spec.vectors.matrix();

  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (spec.phases[a] != spec.phases[b]) return spec.phases[a] < spec.phases[b];
    return column_less(v, a, b);
  });

  std::vector<double> phases(m);
  ComplexMatrix sorted(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    phases[k] = spec.phases[order[k]];
    sorted.set_column(k, v.column(order[k]));
  }
  ComplexMatrix ambient = prob.frame().matrix() * sorted;
  return BoundaryEig{std::move(phases), Frame::create(std::move(ambient))};
}

Extension build_extension(const Frame& eigenframe,
                          const std::vector<double>& phases,
                          const SynthesisParams& params,
                          std::size_t ambient_dim) {
  std::size_t m = eigenframe.rank();
  std::size_t n = ambient_dim;
  if (phases.size() != m) throw ShapeError("phases: count must equal rank");
  if (m >= n)
    throw NoRoomForExtension("build_extension: needs m < n for the doubled eigenvalue");
  std::size_t p = resolve_pivot(params, m);

  // pivot eigenpair goes to position m, others keep their order
  std::vector<std::size_t> order;
  order.reserve(m);
  for (std::size_t k = 0; k < m; ++k)
    if (k != p - 1) order.push_back(k);
  order.push_back(p - 1);

  std::vector<double> reordered(m);
  ComplexMatrix cols(n, m);
  for (std::size_t k = 0; k < m; ++k) {
    reordered[k] = phases[order[k]];
    cols.set_column(k, eigenframe.matrix().column(order[k]));
  }

  UnitaryMatrix basis = extend_to_unitary(Frame::create(std::move(cols)));

  std::vector<cplx> diag(n, cplx(1.0));
  for (std::size_t k = 0; k < m; ++k)
    diag[k] = std::exp(cplx(0.0, reordered[k]));
  diag[m] = diag[m - 1];  // the doubled eigenvalue
  return Extension{std::move(basis), ComplexMatrix::diagonal(diag),
                   std::move(reordered)};
}

SkewHermitianMatrix build_generator(const std::vector<double>& phases,
                                    const SynthesisParams& params,
                                    std::size_t ambient_dim) {
  std::size_t m = phases.size();
  std::size_t n = ambient_dim;
  if (m < 1) throw ShapeError("build_generator: needs m >= 1");
  if (n < m + 1)
    throw NoRoomForExtension("build_generator: needs n >= m + 1");
  if (params.omega.dim() != 2) throw ShapeError("omega: must be 2x2");

  ComplexMatrix h(n, n);
  for (std::size_t k = 0; k + 1 < m; ++k) h(k, k) = cplx(0.0, phases[k]);

  double lam = phases[m - 1];
  ComplexMatrix omega_block(2, 2);
  if (params.winding == 0) {
    // equal diagonal entries commute with omega; keep the block exactly diagonal
    omega_block(0, 0) = cplx(0.0, lam);
    omega_block(1, 1) = cplx(0.0, lam);
  } else {
    ComplexMatrix d(2, 2);
    d(0, 0) = cplx(0.0, lam);
    d(1, 1) = cplx(0.0, lam + kTwoPi * params.winding);
    const ComplexMatrix& w = params.omega.matrix();
    omega_block = w * d * w.adjoint();
  }
  h.set_block(m - 1, m - 1, omega_block);
  return SkewHermitianMatrix::create(h);
}

SynthesisResult synthesize(const BoundaryProblem& prob,
                           const SynthesisParams& params) {
  BoundaryEig eig = diagonalize_boundary(prob);
  Extension ext = build_extension(eig.eigenframe, eig.phases, params,
                                  prob.ambient_dim());
  SkewHermitianMatrix h_local =
      build_generator(ext.phases, params, prob.ambient_dim());

  const ComplexMatrix& e = ext.basis.matrix();
  SkewHermitianMatrix h_ambient =
      SkewHermitianMatrix::create(e * h_local.matrix() * e.adjoint());

  MonodromyReport report = verify_monodromy(h_ambient.matrix(), prob);
  return SynthesisResult{std::move(h_ambient), std::move(ext.basis),
                         std::move(ext.u_matrix), std::move(ext.phases),
                         report};
}

MonodromyReport verify_monodromy(const ComplexMatrix& h,
                                 const BoundaryProblem& prob) {
  if (!h.square() || h.rows() != prob.ambient_dim())
    throw ShapeError("verify_monodromy: H shape mismatch");
  const ComplexMatrix& f0 = prob.frame().matrix();
  ComplexMatrix p0 = f0 * f0.adjoint();

  ComplexMatrix x = expm(h);
  ComplexMatrix xinv = expm(cplx(-1.0) * h);

  MonodromyReport rep;
  rep.proj_residual = (x * p0 * xinv - p0).frobenius_norm();
  rep.restriction_residual =
      (f0.adjoint() * x * f0 - prob.g0().matrix()).frobenius_norm();
  rep.skew_residual = (h + h.adjoint()).frobenius_norm();
  rep.commutator_norm = commutator(h, p0).frobenius_norm();
  rep.nontrivial = rep.commutator_norm > 1e-8;
  return rep;
}

Certificate nontriviality_certificate(const SynthesisParams& params,
                                      [[maybe_unused]] double lambda_m) {
  if (params.omega.dim() != 2) throw ShapeError("omega: must be 2x2");
  const ComplexMatrix& w = params.omega.matrix();
  double off = kTwoPi * std::abs(static_cast<double>(params.winding)) *
               std::abs(w(0, 0)) * std::abs(w(1, 0));
  Certificate cert;
  cert.omega12_abs = off;
  cert.nontrivial = off > 1e-12;
  cert.predicted_commutator_norm = std::numbers::sqrt2 * off;
  return cert;
}

}  // namespace holoflow
