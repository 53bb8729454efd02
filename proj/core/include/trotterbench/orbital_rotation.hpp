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

// Real orbital rotations U = prod_{p>q} exp(theta_pq (a+_p a_q - a+_q a_p)).
//
// On the one-particle space each factor is a Givens rotation G(p,q) acting on
// the (q,p) plane as [[c, -s], [s, c]]. The factors are multiplied left to
// right in descending lexicographic (p,q) order:
//   U = G(n-1,n-2) G(n-1,n-3) ... G(n-1,0) G(n-2,n-3) ... G(1,0)
// and the angle vector is indexed in the same order. Columns of U are the
// rotated orbitals: a one-body operator diag(e) in the rotated frame equals
// U diag(e) U^T in the original frame.

#include <span>
#include <utility>
#include <vector>

#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {

/// (p, q) pairs with p > q in the fixed factor order.
std::vector<std::pair<int, int>> givens_pairs(int n);

inline int angle_count(int n) { return n * (n - 1) / 2; }

Matrix rotation_matrix(std::span<const double> angles, int n);

/// Returns U^T h U for U = rotation_matrix(angles).
Matrix apply_orbital_rotation(std::span<const double> angles, const Matrix& h);

/// Recovers angles with rotation_matrix(angles) == u. Column signs of `u` are
/// normalized in place (a column may be negated) so that every orthogonal
/// input, including det = -1, has a representation; callers that only use
/// products u_pi u_qi (fragment frames) are unaffected by the flips.
std::vector<double> rotation_angles(Matrix& u, double orthogonality_tol = 1e-10);

/// Chain rule through the Givens product: given dF/dU at U(angles), returns
/// dF/dtheta_k for every angle.
std::vector<double> rotation_gradient(std::span<const double> angles, const Matrix& d_u);

/// True for Givens pairs that couple orbitals of equal spin (same parity).
std::vector<bool> spin_conserving_pairs(int n);

struct EigenFrame {
  Vector values;
  Matrix vectors;  // columns are eigenvectors
};

/// Symmetric eigendecomposition that keeps spin-blocked inputs spin-blocked:
/// when every opposite-spin entry is below `tol`, the up and down blocks are
/// diagonalized separately and eigenvector k of the up (down) block is placed
/// in column 2k (2k+1). Otherwise a plain decomposition is returned. Eigen-
/// vector signs follow the first-nonzero-component-positive convention.
EigenFrame spin_adapted_eigh(const Matrix& m, double tol = 1e-12);

/// Flips each column so its first component with |x| > tol is positive.
void canonicalize_signs(Matrix& vectors, double tol = 1e-12);

}  // namespace trotterbench
