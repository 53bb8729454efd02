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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trotterbench/pauli.hpp"
#include "trotterbench/qubit_map.hpp"
#include "trotterbench/qubit_partition.hpp"
#include "trotterbench/sparse_op.hpp"

namespace trotterbench {

struct SpinOperators {
  SparseOp number;
  SparseOp sz;
  SparseOp s2;
};

SpinOperators build_spin_operators(int n_spin, Mapping mapping = Mapping::JordanWigner);

/// Generating set of the single Pauli products that commute with every term
/// of every fragment (identity excluded), from the mod-2 kernel of the
/// stacked symplectic constraints. Z-type generators come first. Supports up
/// to 32 qubits.
std::vector<PauliTerm> find_pauli_symmetries(const std::vector<PauliSum>& fragments);
std::vector<PauliTerm> find_pauli_symmetries(const QubitPartition& p);

/// Greedy pairwise-commuting subset, keeping the input order.
std::vector<PauliTerm> commuting_subset(const std::vector<PauliTerm>& symmetries);

/// Electron count, S_z and optionally the total-spin quantum number s.
struct FermionicLabels {
  int electrons = 0;
  double sz = 0.0;
  std::optional<double> spin;
};

struct QubitLabels {
  std::vector<PauliTerm> symmetries;
  std::vector<int> zeta;  // +1 or -1 per symmetry
};

using SectorLabels = std::variant<FermionicLabels, QubitLabels>;

std::string describe(const SectorLabels& labels);

struct SymmetrySector {
  SectorLabels labels;
  /// full_dim x dim matrix with orthonormal columns
  SparseMatrix basis;

  Eigen::Index dim() const { return basis.cols(); }
  Eigen::Index full_dim() const { return basis.rows(); }
};

/// States with the given electron count and S_z in the chosen mapping's
/// basis; with a spin label, the s(s+1) eigenvectors of S^2 inside that
/// block. Throws EmptySectorError when nothing matches.
SymmetrySector fermionic_sector(int n_spin, Mapping mapping, const FermionicLabels& labels);

/// Joint eigenspace of commuting Pauli symmetries with eigenvalues zeta,
/// i.e. the range of prod (I + zeta_i Q_i) / 2. Throws EmptySectorError for
/// an empty range and ValidationError for anticommuting symmetries.
SymmetrySector qubit_sector(const std::vector<PauliTerm>& symmetries, const std::vector<int>& zeta, int n_qubits);

SymmetrySector full_space(int n_qubits);

/// B^dagger a B. When leakage is given it receives ||(I - B B^dagger) a B||_F,
/// which vanishes exactly when a maps the sector into itself.
SparseOp project(const SparseOp& a, const SymmetrySector& sector, double* leakage = nullptr);

/// Expectation of each symmetry in the state, rounded to +1 or -1.
/// Symmetries whose expectation is not within 1e-6 of +-1 get label 0.
std::vector<int> measure_labels(const std::vector<PauliTerm>& symmetries, const CVector& state);

}  // namespace trotterbench
