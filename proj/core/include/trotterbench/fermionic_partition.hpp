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
#include <optional>
#include <string>
#include <vector>

#include "trotterbench/hamiltonian.hpp"
#include "trotterbench/optimize.hpp"

namespace trotterbench {

enum class FragmentKind { OneElectron, LowRank, FullRank, LcuReflection };

std::string to_string(FragmentKind kind);
FragmentKind fragment_kind_from_string(const std::string& name);

/// One fast-forwardable fermionic fragment U^T (diagonal operator) U, where
/// column i of U = rotation_matrix(angles) defines orbital i of the frame.
///
///   OneElectron:   sum_i onebody_i n_i
///   LowRank:       sum_ij lambda_ij n_i n_j with lambda = sign * eps eps^T
///   FullRank:      sum_ij lambda_ij n_i n_j
///   LcuReflection: sum_ij lambda_ij r_i r_j with r_i = 1 - 2 n_i
struct FermionFragment {
  FragmentKind kind = FragmentKind::FullRank;
  std::vector<double> angles;
  Matrix lambda;                 // empty for OneElectron
  std::optional<Vector> epsilon; // LowRank (and reflections derived from it)
  double rank1_sign = 1.0;
  std::optional<Vector> onebody; // OneElectron

  int n_spin() const;
  Matrix rotation() const;

  /// (constant, h, g) of this fragment in the original orbital frame.
  MolecularTensors tensors() const;

  /// Eigenvalue on the frame determinant with the given occupation bits.
  double diagonal_energy(std::uint64_t occupation) const;
};

struct FermionPartition {
  std::string method;
  int n_spin = 0;
  double constant = 0.0;
  std::vector<FermionFragment> fragments;
  Tensor4 residual;            // two-body part left unassigned
  double residual_l1 = 0.0;
  MolecularTensors target;     // what the fragments plus residual reproduce
  std::uint64_t seed = 0;
  double threshold = 0.0;
  bool converged = true;
  std::vector<double> residual_history;  // initial L1, then L1 after each fitted fragment
  std::vector<std::string> diagnostics;

  int two_body_count() const;
};

/// constant + sum of fragment tensors; the residual is not included.
MolecularTensors reconstruct(const FermionPartition& p);

/// One-electron fragment diagonalizing h (spin blocks kept separate).
FermionFragment one_electron_fragment(const Matrix& h);

FermionPartition lr_decompose(const MolecularTensors& t, double threshold);

struct FitOptions {
  std::uint64_t seed = 7;
  int restarts = 1;
  double angle_noise = 0.01;
  bool spin_conserving = true;  // cross-spin Givens angles pinned to zero
  BfgsOptions bfgs{.max_iterations = 3000};
};

FermionPartition fro_decompose(const MolecularTensors& t, int n_fragments, double threshold,
                               const FitOptions& options = {},
                               const FermionPartition* warm_start = nullptr);

FermionPartition gfro_decompose(const MolecularTensors& t, double threshold, int max_fragments,
                                const FitOptions& options = {});

struct FoldedHamiltonian {
  MolecularTensors rotated;  // h = 0, g = g~ + eps_p delta_pqrs in the frame of h
  Matrix rotation;           // U1; orbital i of the frame is column i
  std::vector<double> angles;
  Vector orbital_energies;

  MolecularTensors to_original_frame() const;
};

FoldedHamiltonian fold_one_body(const MolecularTensors& t);

/// GFRO on the folded Hamiltonian, with fragments expressed in the original frame.
FermionPartition sd_gfro_decompose(const MolecularTensors& t, double threshold, int max_fragments,
                                   const FitOptions& options = {});

FermionPartition lcu_postprocess(const FermionPartition& p);

struct RotationCount {
  long long bound = 0;               // 2 N^2 Gamma - N, clamped at 0
  long long total = 0;               // sum of the breakdown
  long long orbital_rotations = 0;   // (Gamma + 1) N (N - 1)
  long long two_body = 0;            // N (N + 1) per two-electron fragment
  long long one_body = 0;            // N per one-electron fragment
  int gamma = 0;
  bool degenerate = false;
};

RotationCount fermionic_rotation_count(const FermionPartition& p);
RotationCount fermionic_rotation_count(int n_spin, int n_one_electron, int n_two_electron);

std::string partition_to_json(const FermionPartition& p);
FermionPartition partition_from_json(const std::string& text);

}  // namespace trotterbench
