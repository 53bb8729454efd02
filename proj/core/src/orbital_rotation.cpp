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

#include "trotterbench/orbital_rotation.hpp"

#include <cmath>
#include <string>

#include "trotterbench/errors.hpp"

namespace trotterbench {

std::vector<std::pair<int, int>> givens_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(angle_count(n)));
  for (int p = n - 1; p >= 1; --p)
    for (int q = p - 1; q >= 0; --q) out.emplace_back(p, q);
  return out;
}

namespace {

void check_length(std::span<const double> angles, int n) {
  if (static_cast<int>(angles.size()) != angle_count(n)) {
    throw DimensionError("expected " + std::to_string(angle_count(n)) + " rotation angles for n=" +
                         std::to_string(n) + ", got " + std::to_string(angles.size()));
  }
}

// m <- m * G(p,q,theta): mixes columns q and p.
void rotate_columns(Matrix& m, int p, int q, double c, double s) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double mq = m(r, q), mp = m(r, p);
    m(r, q) = c * mq + s * mp;
    m(r, p) = -s * mq + c * mp;
  }
}

// m <- G(p,q,theta)^T * m: mixes rows q and p.
void rotate_rows_transposed(Matrix& m, int p, int q, double c, double s) {
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    const double mq = m(q, col), mp = m(p, col);
    m(q, col) = c * mq + s * mp;
    m(p, col) = -s * mq + c * mp;
  }
}

}  // namespace

Matrix rotation_matrix(std::span<const double> angles, int n) {
  check_length(angles, n);
  Matrix u = Matrix::Identity(n, n);
  const auto pairs = givens_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (angles[k] == 0.0) continue;
    rotate_columns(u, pairs[k].first, pairs[k].second, std::cos(angles[k]), std::sin(angles[k]));
  }
  return u;
}

Matrix apply_orbital_rotation(std::span<const double> angles, const Matrix& h) {
  if (h.rows() != h.cols()) throw DimensionError("one-body matrix must be square");
  const Matrix u = rotation_matrix(angles, static_cast<int>(h.rows()));
  return u.transpose() * h * u;
}

std::vector<double> rotation_angles(Matrix& u, double orthogonality_tol) {
  const int n = static_cast<int>(u.rows());
  if (u.cols() != n) throw DimensionError("rotation must be square");
  if ((u.transpose() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > orthogonality_tol) {
    throw ValidationError("matrix is not orthogonal");
  }
  // U = A_{n-1} ... A_1 with A_p = G(p,p-1) ... G(p,0). Only A_p touches
  // index p among the remaining factors, so column p of the running residual
  // B = (A_{n-1} ... A_{p+1})^T U fixes the angles of A_p in spherical
  // coordinates: B e_p = A_p e_p.
  std::vector<double> angles(static_cast<std::size_t>(angle_count(n)), 0.0);
  Matrix b = u;
  std::size_t offset = 0;
  for (int p = n - 1; p >= 1; --p) {
    // A non-negative diagonal keeps every angle in (-pi/2, pi/2], so block
    // structure in U (e.g. spin) maps onto exactly zero angles.
    if (b(p, p) < 0.0) {
      u.col(p) *= -1.0;
      b.col(p) *= -1.0;
    }
    // Angles of A_p are stored in order q = p-1, ..., 0.
    std::vector<double> theta(static_cast<std::size_t>(p));
    const Vector col = b.col(p).head(p + 1);
    // tail[q] = norm of components q+1..p, accumulated from the end
    std::vector<double> tail(static_cast<std::size_t>(p + 1), 0.0);
    for (int k = p; k >= 1; --k) tail[static_cast<std::size_t>(k - 1)] = std::hypot(tail[static_cast<std::size_t>(k)], col(k));
    for (int q = 0; q < p; ++q) {
      const double rest = q == p - 1 ? col(p) : tail[static_cast<std::size_t>(q)];
      theta[static_cast<std::size_t>(q)] = std::atan2(-col(q), rest);
    }
    for (int q = 0; q < p; ++q) angles[offset + static_cast<std::size_t>(p - 1 - q)] = theta[static_cast<std::size_t>(q)];
    // b <- A_p^T b, applying G(p,q)^T for q = p-1 .. 0 in that order.
    for (int q = p - 1; q >= 0; --q) {
      const double t = theta[static_cast<std::size_t>(q)];
      rotate_rows_transposed(b, p, q, std::cos(t), std::sin(t));
    }
    offset += static_cast<std::size_t>(p);
  }
  if (n > 0 && b(0, 0) < 0.0) u.col(0) *= -1.0;
  return angles;
}

std::vector<double> rotation_gradient(std::span<const double> angles, const Matrix& d_u) {
  const int n = static_cast<int>(d_u.rows());
  check_length(angles, n);
  // With L_k = G_1..G_k and R_k = G_k..G_K, dU/dtheta_k = L_k K_k R_{k+1},
  // so the derivative is tr(M_k K_k) with M_k = R_{k+1} dU^T L_k and
  // M_k = G_k^T M_{k-1} G_k, M_0 = U dU^T.
  const Matrix u = rotation_matrix(angles, n);
  Matrix m = u * d_u.transpose();
  const auto pairs = givens_pairs(n);
  std::vector<double> grad(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [p, q] = pairs[k];
    const double c = std::cos(angles[k]), s = std::sin(angles[k]);
    rotate_rows_transposed(m, p, q, c, s);
    rotate_columns(m, p, q, c, s);
    grad[k] = m(q, p) - m(p, q);
  }
  return grad;
}

std::vector<bool> spin_conserving_pairs(int n) {
  std::vector<bool> out;
  for (const auto& [p, q] : givens_pairs(n)) out.push_back((p - q) % 2 == 0);
  return out;
}

void canonicalize_signs(Matrix& vectors, double tol) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      if (std::abs(vectors(r, c)) > tol) {
        if (vectors(r, c) < 0.0) vectors.col(c) *= -1.0;
        break;
      }
    }
  }
}

EigenFrame spin_adapted_eigh(const Matrix& m, double tol) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw DimensionError("eigendecomposition needs a square matrix");
  bool blocked = n % 2 == 0 && n > 0;
  for (int p = 0; p < n && blocked; ++p)
    for (int q = p % 2 == 0 ? 1 : 0; q < n; q += 2)
      if (std::abs(m(p, q)) > tol) {
        blocked = false;
        break;
      }
  EigenFrame out;
  if (!blocked) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    out.values = es.eigenvalues();
    out.vectors = es.eigenvectors();
    canonicalize_signs(out.vectors, tol);
    return out;
  }
  const int half = n / 2;
  out.values = Vector::Zero(n);
  out.vectors = Matrix::Zero(n, n);
  for (int spin = 0; spin < 2; ++spin) {
    Matrix block(half, half);
    for (int i = 0; i < half; ++i)
      for (int j = 0; j < half; ++j) block(i, j) = m(2 * i + spin, 2 * j + spin);
    Eigen::SelfAdjointEigenSolver<Matrix> es(block);
    Matrix vecs = es.eigenvectors();
    canonicalize_signs(vecs, tol);
    for (int k = 0; k < half; ++k) {
      out.values(2 * k + spin) = es.eigenvalues()(k);
      for (int i = 0; i < half; ++i) out.vectors(2 * i + spin, 2 * k + spin) = vecs(i, k);
    }
  }
  return out;
}

}  // namespace trotterbench
