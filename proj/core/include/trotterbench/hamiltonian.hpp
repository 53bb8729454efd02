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

// Molecular integral tensors in the spin-orbital form
//
//   H = c + sum_pq h_pq a+_p a_q + sum_pqrs g_pqrs a+_p a_q a+_r a_s
//
// Note the operator ordering of the two-body part: it is a+ a a+ a, not the
// normal-ordered a+ a+ a a. Spin orbitals are interleaved: index 2k is the
// spin-up partner of spatial orbital k and 2k+1 the spin-down partner.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace trotterbench {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense rank-4 tensor with n^4 entries, row-major (s fastest).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dim() const { return n_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(int p, int q, int r, int s) { return data_[index(p, q, r, s)]; }
  double operator()(int p, int q, int r, int s) const { return data_[index(p, q, r, s)]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  /// n^2 x n^2 view with rows indexed by the pair (pq) and columns by (rs).
  Eigen::Map<const RowMatrix> supermatrix() const {
    return {data_.data(), static_cast<Eigen::Index>(n_) * n_, static_cast<Eigen::Index>(n_) * n_};
  }

  double l1_norm() const;
  double max_abs() const;

  Tensor4& operator+=(const Tensor4& other);
  Tensor4& operator-=(const Tensor4& other);
  Tensor4& operator*=(double s);

  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  std::size_t index(int p, int q, int r, int s) const {
    return ((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s;
  }
  int n_ = 0;
  std::vector<double> data_;
};

Tensor4 operator+(Tensor4 a, const Tensor4& b);
Tensor4 operator-(Tensor4 a, const Tensor4& b);

/// Full Hamiltonian data over spin orbitals.
struct MolecularTensors {
  int n_spatial = 0;
  double constant = 0.0;
  Matrix h;   // n_spin x n_spin
  Tensor4 g;  // n_spin^4, a+_p a_q a+_r a_s ordering
  std::optional<int> n_electrons;

  int n_spin() const { return 2 * n_spatial; }

  static MolecularTensors zeros(int n_spatial);
};

bool bit_equal(const MolecularTensors& a, const MolecularTensors& b);

struct Violation {
  enum class Kind { NonFinite, OneBodySymmetry, PairSymmetry, SupermatrixSymmetry, Shape };
  Kind kind;
  std::vector<int> indices;
  double magnitude = 0.0;
  std::string message;
};

std::string to_string(Violation::Kind kind);

/// Checks the invariants of MolecularTensors. Symmetry comparisons use the
/// relative tolerance |a - b| <= tol * max(1, |a|, |b|). One violation is
/// reported per symmetry orbit, so a single broken relation shows up once.
std::vector<Violation> validate(const MolecularTensors& t, double tol = 1e-12);

/// Throws ValidationError listing the first few violations, if any.
void require_valid(const MolecularTensors& t, double tol = 1e-12);

/// Converts spatial chemist-notation integrals (pq|rs) into spin-orbital
/// tensors in the a+ a a+ a ordering:
///   g_{p s1, q s1, r s2, s s2} = (pq|rs) / 2
///   h_ps = h^spatial_ps - sum_q g_pqqs
/// The one-body correction comes from
///   a+_p a+_r a_s a_q = a+_p a_q a+_r a_s - delta_qr a+_p a_s.
MolecularTensors expand_to_spin_orbitals(const Matrix& h_spatial, const Tensor4& g_spatial,
                                         double constant = 0.0, double tol = 1e-12);

/// Reads an FCIDUMP file (1-based indices; zero indices mark the constant
/// and one-body entries). Integrals are assumed real with 8-fold symmetry.
MolecularTensors load_fcidump(const std::filesystem::path& path);
MolecularTensors parse_fcidump(const std::string& text);

inline constexpr int kTensorSchemaVersion = 1;

MolecularTensors load_json(const std::filesystem::path& path);
void save_json(const MolecularTensors& t, const std::filesystem::path& path);
std::string to_json_string(const MolecularTensors& t);
MolecularTensors from_json_string(const std::string& text);

/// 4-index transform X'_ijkl = sum U_pi U_qj U_rk U_sl X_pqrs.
Tensor4 transform(const Tensor4& x, const Matrix& u);

}  // namespace trotterbench
