// Copyright 2026 The trotterbench Authors
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

#include "trotterbench/sparse_op.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "trotterbench/errors.hpp"

namespace trotterbench {

namespace {

Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Uniform doubles in [-1, 1) from the raw 64-bit engine output, so the
// sequence does not depend on the standard library's distributions.
CVector random_vector(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto next = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0; };
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = next();
    v[i] = {re, next()};
  }
  return v;
}

}  // namespace

bool SparseOp::is_real() const {
  for (Eigen::Index k = 0; k < matrix.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(matrix, k); it; ++it)
      if (it.value().imag() != 0.0) return false;
  return true;
}

double SparseOp::hermiticity_error() const {
  const SparseMatrix d = matrix - SparseMatrix(matrix.adjoint());
  double e = 0.0;
  for (Eigen::Index k = 0; k < d.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(d, k); it; ++it) e = std::max(e, std::abs(it.value()));
  return e;
}

double Extremes::norm() const { return std::max(std::abs(min), std::abs(max)); }

SparseOp to_sparse(const PauliSum& h, int max_qubits, double drop_tol) {
  const int n = h.n_qubits();
  if (n > max_qubits)
    throw ResourceError("operator on " + std::to_string(n) + " qubits exceeds the cap of " +
                        std::to_string(max_qubits) + "; project onto a symmetry sector first");
  // P|b> = i^{|x & z|} (-1)^{|z & b|} |b ^ x>
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Complex>>> by_flip;
  double scale = 0.0;
  for (const auto& [p, c] : h.terms()) {
    by_flip[p.x].emplace_back(p.z, c * i_power(std::popcount(p.x & p.z)));
    scale += std::abs(c);
  }
  const double cutoff = drop_tol * scale;
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * by_flip.size());
  for (std::uint64_t b = 0; b < dim; ++b) {
    for (const auto& [x, zs] : by_flip) {
      Complex v{};
      for (const auto& [z, c] : zs) v += (std::popcount(z & b) & 1) ? -c : c;
      if (std::abs(v) > cutoff)
        triplets.emplace_back(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b), v);
    }
  }
  SparseOp op;
  op.n_qubits = n;
  op.matrix.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  op.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

SparseOp from_matrix(SparseMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("operator matrix must be square");
  SparseOp op;
  op.n_qubits = std::bit_width(static_cast<std::uint64_t>(std::max<Eigen::Index>(m.rows(), 1) - 1));
  op.matrix = std::move(m);
  op.matrix.makeCompressed();
  return op;
}

Extremes dense_extremes(const CMatrix& hermitian) {
  if (hermitian.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("dense Hermitian eigensolver failed", 0.0);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

Extremes dense_extremes(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetric, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("dense symmetric eigensolver failed", 0.0);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

Extremes lanczos_extremes(Eigen::Index dim, const MatVec& op, const EigenOptions& opts, const CVector* start,
                          CVector* min_vector) {
  if (dim == 0) return {};
  CVector v = start ? *start : random_vector(dim, opts.seed);
  if (v.size() != dim) throw DimensionError("Lanczos start vector has the wrong dimension");
  const double v_norm = v.norm();
  if (v_norm == 0.0) throw DimensionError("Lanczos start vector is zero");
  v /= v_norm;

  const Eigen::Index m = std::min<Eigen::Index>(dim, std::max(opts.krylov_dim, 2));
  CMatrix basis(dim, m + 1);
  CVector w(dim);
  double residual = 0.0;
  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    std::vector<double> alpha, beta;
    basis.col(0) = v;
    for (Eigen::Index j = 0; j < m; ++j) {
      op(basis.col(j), w);
      alpha.push_back(basis.col(j).dot(w).real());
      // two passes of classical Gram-Schmidt against the whole basis
      for (int pass = 0; pass < 2; ++pass) {
        const CVector proj = basis.leftCols(j + 1).adjoint() * w;
        w.noalias() -= basis.leftCols(j + 1) * proj;
      }
      const double b = w.norm();
      beta.push_back(b);

      const Eigen::Index k = j + 1;
      const bool last = (k == m);
      if (k % 8 != 0 && !last && b > 0.0) {
        basis.col(k) = w / b;
        continue;
      }
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
      for (Eigen::Index i = 0; i < k; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
      const Eigen::Index lo = 0, hi = k - 1;
      const double th_lo = es.eigenvalues()[lo], th_hi = es.eigenvalues()[hi];
      const double scale = std::max({std::abs(th_lo), std::abs(th_hi), 1e-300});
      const double r_lo = b * std::abs(es.eigenvectors()(k - 1, lo));
      const double r_hi = b * std::abs(es.eigenvectors()(k - 1, hi));
      residual = std::max(r_lo, r_hi);
      const bool invariant = b <= 1e-13 * scale || k == dim;
      if (invariant || residual <= std::max(opts.tolerance * scale, opts.abs_tolerance)) {
        if (min_vector) {
          *min_vector = basis.leftCols(k) * es.eigenvectors().col(lo).cast<Complex>();
          min_vector->normalize();
        }
        return {th_lo, th_hi};
      }
      if (!last) {
        basis.col(k) = w / b;
        continue;
      }
      v = basis.leftCols(k) * (es.eigenvectors().col(lo) + es.eigenvectors().col(hi)).cast<Complex>();
      v.normalize();
    }
  }
  throw ConvergenceError("Lanczos did not converge after " + std::to_string(opts.max_restarts) + " restarts",
                         residual);
}

Extremes extreme_eigenvalues(const SparseOp& a, const EigenOptions& opts) {
  if (a.dim() <= opts.dense_limit) return dense_extremes(CMatrix(a.matrix));
  return lanczos_extremes(
      a.dim(), [&](const CVector& in, CVector& out) { out.noalias() = a.matrix * in; }, opts);
}

double spectral_norm(const SparseOp& a, const EigenOptions& opts) {
  const SparseMatrix adj = a.matrix.adjoint();
  const double scale = std::max(a.matrix.norm(), 1e-300);
  if ((a.matrix - adj).norm() <= 1e-12 * scale) return extreme_eigenvalues(a, opts).norm();
  if ((a.matrix + adj).norm() <= 1e-12 * scale) {
    SparseOp h;
    h.n_qubits = a.n_qubits;
    h.matrix = a.matrix * Complex(0.0, 1.0);
    return extreme_eigenvalues(h, opts).norm();
  }
  SparseOp g;
  g.n_qubits = a.n_qubits;
  g.matrix = adj * a.matrix;
  return std::sqrt(std::max(0.0, extreme_eigenvalues(g, opts).max));
}

SparseOp commutator(const SparseOp& a, const SparseOp& b) {
  if (a.dim() != b.dim()) throw DimensionError("commutator of operators with different dimensions");
  SparseOp c;
  c.n_qubits = a.n_qubits;
  c.matrix = a.matrix * b.matrix - b.matrix * a.matrix;
  return c;
}

double commutator_norm(const SparseOp& a, const SparseOp& b, const EigenOptions& opts) {
  if (a.dim() != b.dim()) throw DimensionError("commutator of operators with different dimensions");
  if (a.dim() <= opts.dense_limit) {
    const CMatrix da(a.matrix), db(b.matrix);
    const CMatrix ab = da * db;
    return dense_extremes(CMatrix(Complex(0.0, 1.0) * (ab - ab.adjoint()))).norm();
  }
  CVector t1(a.dim()), t2(a.dim());
  return lanczos_extremes(
             a.dim(),
             [&](const CVector& in, CVector& out) {
               t1.noalias() = b.matrix * in;
               out.noalias() = a.matrix * t1;
               t2.noalias() = a.matrix * in;
               t1.noalias() = b.matrix * t2;
               out = Complex(0.0, 1.0) * (out - t1);
             },
             opts)
      .norm();
}

}  // namespace trotterbench
