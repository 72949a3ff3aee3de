// Copyright (c) 2026 The holoflow authors.
// SPDX-License-Identifier: Apache-2.0

#include "holoflow/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holoflow/errors.hpp"

namespace holoflow {

namespace {

double vec_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// v -= sum_j <q_j, v> q_j over the accepted columns q_0..q_{count-1}.
void project_out(const ComplexMatrix& q, std::size_t count,
                 std::vector<cplx>& v) {
  std::size_t n = q.rows();
  for (std::size_t j = 0; j < count; ++j) {
    cplx dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, j)) * v[i];
    for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q(i, j);
  }
}

}  // namespace

Frame orthonormalize(const ComplexMatrix& vectors, double tol) {
  if (vectors.rows() == 0 || vectors.cols() == 0)
    throw ShapeError("orthonormalize: empty input");
  if (tol <= 0.0) throw ShapeError("orthonormalize: tol must be positive");
  std::size_t n = vectors.rows();
  ComplexMatrix q(n, vectors.cols());
  std::size_t count = 0;
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    std::vector<cplx> v = vectors.column(c);
    double original = vec_norm(v);
    if (original == 0.0) continue;
    // MGS applied twice
    project_out(q, count, v);
    project_out(q, count, v);
    double r = vec_norm(v);
    if (r < tol * original) continue;
    for (cplx& z : v) z /= r;
    q.set_column(count, v);
    ++count;
  }
  if (count == 0) throw EmptySpan("orthonormalize: all inputs numerically zero");
  return Frame::create(q.block(0, 0, n, count));
}

UnitaryMatrix extend_to_unitary(const Frame& partial) {
  std::size_t n = partial.ambient_dim();
  std::size_t m = partial.rank();
  ComplexMatrix q(n, n);
  q.set_block(0, 0, partial.matrix());
  for (std::size_t count = m; count < n; ++count) {
    // candidate with the largest residual against the current frame
    std::size_t best = 0;
    double best_norm = -1.0;
    std::vector<cplx> best_res;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<cplx> v(n, cplx(0.0));
      v[j] = 1.0;
      project_out(q, count, v);
      double r = vec_norm(v);
      if (r > best_norm) {
        best_norm = r;
        best = j;
        best_res = std::move(v);
      }
    }
    (void)best;
    project_out(q, count, best_res);  // reorthogonalize
    double r = vec_norm(best_res);
    if (r == 0.0) throw NotOrthonormal("extend_to_unitary: breakdown");
    for (cplx& z : best_res) z /= r;
    q.set_column(count, best_res);
  }
  return UnitaryMatrix::create(std::move(q));
}

HermitianEig hermitian_eig(const ComplexMatrix& a, double tol) {
  if (!a.square()) throw ShapeError("hermitian_eig: matrix not square");
  double scale = norm_scale(a);
  if ((a - a.adjoint()).frobenius_norm() > 1e-10 * scale)
    throw NotHermitian("hermitian_eig: input not Hermitian");
  std::size_t n = a.rows();
  ComplexMatrix b = hermitian_part(a);  // kill roundoff asymmetry
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(b(i, j));
    return std::sqrt(s);
  };

  double target = tol * scale;
  for (int sweep = 0; sweep < 60 && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cplx apq = b(p, q);
        double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        double app = b(p, p).real();
        double aqq = b(q, q).real();
        double tau = (aqq - app) / (2.0 * mag);
        double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double sigma = t * c;
        cplx phase = apq / mag;
        cplx s = sigma * phase;  // J(p,q) = s, J(q,p) = -conj(s)
        // columns: B <- B J
        for (std::size_t i = 0; i < n; ++i) {
          cplx bip = b(i, p), biq = b(i, q);
          b(i, p) = c * bip - std::conj(s) * biq;
          b(i, q) = s * bip + c * biq;
        }
        // rows: B <- J^dag B
        for (std::size_t j = 0; j < n; ++j) {
          cplx bpj = b(p, j), bqj = b(q, j);
          b(p, j) = c * bpj - s * bqj;
          b(q, j) = std::conj(s) * bpj + c * bqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - std::conj(s) * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return b(i, i).real() < b(j, j).real();
  });
  HermitianEig out{std::vector<double>(n), UnitaryMatrix::create(ComplexMatrix())};
  ComplexMatrix vs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = b(order[k], order[k]).real();
    vs.set_column(k, v.column(order[k]));
  }
  out.vectors = UnitaryMatrix::create(std::move(vs));
  return out;
}

SpectralData unitary_eig(const UnitaryMatrix& u, double group_tol) {
  std::size_t n = u.dim();
  const ComplexMatrix& um = u.matrix();
  ComplexMatrix c_part = hermitian_part(um);
  ComplexMatrix s_part = cplx(0.0, -1.0) * skew_part(um);  // Hermitian

  HermitianEig stage1 = hermitian_eig(c_part);
  ComplexMatrix v = stage1.vectors.matrix();

  // resolve clusters of the Hermitian-part spectrum with the skew part
  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo + 1;
    while (hi < n && stage1.values[hi] - stage1.values[hi - 1] < group_tol) ++hi;
    std::size_t r = hi - lo;
    if (r > 1) {
      ComplexMatrix vc = v.block(0, lo, n, r);
      ComplexMatrix k = vc.adjoint() * (s_part * vc);
      HermitianEig stage2 = hermitian_eig(hermitian_part(k));
      v.set_block(0, lo, vc * stage2.vectors.matrix());
    }
    lo = hi;
  }

  ComplexMatrix d = v.adjoint() * (um * v);
  SpectralData out{std::vector<double>(n),
                   UnitaryMatrix::create(std::move(v)), "principal"};
  for (std::size_t k = 0; k < n; ++k) {
    double phase = std::arg(d(k, k));
    if (phase <= -std::numbers::pi) phase = std::numbers::pi;
    out.phases[k] = phase;
  }
  return out;
}

ComplexMatrix expm(const ComplexMatrix& m) {
  if (!m.square()) throw ShapeError("expm: matrix not square");
  if (!m.is_finite()) throw ShapeError("expm: non-finite entries");
  std::size_t n = m.rows();
  double norm = m.one_norm();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  ComplexMatrix x = std::pow(2.0, -s) * m;

  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = cplx(1.0 / k) * (term * x);
    sum += term;
    if (term.frobenius_norm() < 1e-18 * sum.frobenius_norm()) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

UnitaryMatrix expm_spectral(const SpectralData& s, double t) {
  std::size_t n = s.phases.size();
  std::vector<cplx> d(n);
  for (std::size_t k = 0; k < n; ++k)
    d[k] = std::exp(cplx(0.0, t * s.phases[k]));
  const ComplexMatrix& v = s.vectors.matrix();
  return UnitaryMatrix::create(v * ComplexMatrix::diagonal(d) * v.adjoint());
}

SpectralData spectral_from_skew(const ComplexMatrix& h) {
  // skew_part is the identity on skew input; it only strips roundoff defects
  HermitianEig eig = hermitian_eig(cplx(0.0, -1.0) * skew_part(h));
  return SpectralData{std::move(eig.values), std::move(eig.vectors), "unbounded"};
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw ShapeError("commutator: dimension mismatch");
  return a * b - b * a;
}

}  // namespace holoflow
