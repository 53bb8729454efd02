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
#include <string>

#include "trotterbench/fermion_operator.hpp"
#include "trotterbench/fermionic_partition.hpp"
#include "trotterbench/pauli.hpp"

namespace trotterbench {

enum class Mapping { JordanWigner, BravyiKitaev };

std::string to_string(Mapping m);
Mapping mapping_from_string(const std::string& name);

/// Image of a+_j (dagger) or a_j on n_qubits qubits.
///   JW: a+_j = (X_j - i Y_j)/2 Z_{<j}
///   BK: a+_j = X_{U(j)} X_j Z_{P(j)} / 2 - i X_{U(j)} Y_j Z_{R(j)} / 2
PauliSum ladder_image(Mapping m, int mode, bool dagger, int n_qubits);

/// Fenwick-tree sets for the BK encoding, as bit masks. Indices count from 0;
/// the 1-based Fenwick index of mode j is j + 1.
std::uint64_t bk_update_set(int mode, int n_qubits);      // ancestors of j (excluding j)
std::uint64_t bk_parity_set(int mode);                    // qubits whose sum is the parity of modes < j
std::uint64_t bk_occupation_set(int mode);                // qubits whose parity is n_j
std::uint64_t bk_remainder_set(int mode);                 // parity set minus children of j

/// BK qubit basis label of an occupation-number state: qubit k holds the
/// parity of modes (k + 1 - lowbit(k + 1), k].
std::uint64_t bk_encode(std::uint64_t occupation, int n_qubits);

/// Maps a fermionic operator termwise; n_qubits defaults to op.n_modes.
PauliSum map_to_qubits(const FermionOperator& op, Mapping m, int n_qubits = -1,
                       double prune_tol = PauliSum::kDefaultPrune);
PauliSum jordan_wigner(const FermionOperator& op);
PauliSum bravyi_kitaev(const FermionOperator& op);

PauliSum map_to_qubits(const MolecularTensors& t, Mapping m);
PauliSum map_to_qubits(const FermionFragment& f, Mapping m);

}  // namespace trotterbench
