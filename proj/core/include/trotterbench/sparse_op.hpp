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

#pragma once

#include <cstdint>
#include <functional>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "trotterbench/pauli.hpp"

namespace trotterbench {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr int kDefaultMaxQubits = 16;

/// Operator on 2^n_qubits states; basis state b has qubit k in bit k of b.
struct SparseOp {
  int n_qubits = 0;
  SparseMatrix matrix;

  Eigen::Index dim() const { return matrix.rows(); }
  /// true when every stored entry has a zero imaginary part
  bool is_real() const;
  /// max |A - A^dagger| over entries
  double hermiticity_error() const;
};

/// Exact matrix of h including its identity part. Entries with
/// |value| <= drop_tol * sum|c| are omitted so that cancelling Pauli terms
/// leave no structural nonzeros. Throws ResourceError above max_qubits.
SparseOp to_sparse(const PauliSum& h, int max_qubits = kDefaultMaxQubits, double drop_tol = 1e-14);

/// Wraps an explicit square matrix; dim need not be a power of two.
SparseOp from_matrix(SparseMatrix m);

struct EigenOptions {
  /// Dense solve at or below this dimension, Lanczos above.
  Eigen::Index dense_limit = 1024;
  /// Lanczos stops when both extreme Ritz residuals are below
  /// tolerance * max|theta|; by Bauer-Fike this bounds the eigenvalue error.
  double tolerance = 1e-9;
  /// Absolute residual that also counts as converged (for near-zero spectra).
  double abs_tolerance = 0.0;
  int krylov_dim = 160;
  int max_restarts = 40;
  std::uint64_t seed = 0x5eed;
};

struct Extremes {
  double min = 0.0;
  double max = 0.0;

  double range() const { return max - min; }
  double norm() const;
};

using MatVec = std::function<void(const CVector& in, CVector& out)>;

/// Extreme eigenvalues of a Hermitian operator given as a product routine.
/// Lanczos with full reorthogonalization; after krylov_dim steps it restarts
/// from the sum of the two extreme Ritz vectors. The start vector defaults
/// to a seeded random vector; a caller-provided start restricts the search
/// to the invariant subspace it generates. When min_vector is given it
/// receives the normalized Ritz vector of the lowest eigenvalue. Throws
/// ConvergenceError carrying the larger final residual.
Extremes lanczos_extremes(Eigen::Index dim, const MatVec& op, const EigenOptions& opts = {},
                          const CVector* start = nullptr, CVector* min_vector = nullptr);

Extremes dense_extremes(const CMatrix& hermitian);
Extremes dense_extremes(const Eigen::MatrixXd& symmetric);

Extremes extreme_eigenvalues(const SparseOp& a, const EigenOptions& opts = {});

/// Largest singular value. Hermitian and anti-Hermitian inputs go through
/// extreme eigenvalues of a or i*a; other matrices through a^dagger a.
double spectral_norm(const SparseOp& a, const EigenOptions& opts = {});

SparseOp commutator(const SparseOp& a, const SparseOp& b);
/// ||[a, b]|| for Hermitian a and b, via the Hermitian operator i[a, b]
/// applied matrix-free.
double commutator_norm(const SparseOp& a, const SparseOp& b, const EigenOptions& opts = {});

}  // namespace trotterbench
