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

#include <string>
#include <vector>

#include "trotterbench/pauli.hpp"

namespace trotterbench {

/// Set of pairwise commuting Pauli terms; the constructor checks every pair.
class PauliGroup {
 public:
  PauliGroup() = default;
  PauliGroup(std::vector<PauliTerm> terms, int label);

  const std::vector<PauliTerm>& terms() const { return terms_; }
  int label() const { return label_; }
  int n_qubits() const;
  PauliSum to_sum(int n_qubits) const;

 private:
  std::vector<PauliTerm> terms_;
  int label_ = 0;
};

struct QubitPartition {
  std::string method;
  /// Non-identity part of the source, split into groups.
  std::vector<PauliGroup> groups;
  PauliSum source;
  /// Identity coefficient of the source; it is not assigned to any group.
  double constant = 0.0;

  std::vector<PauliSum> fragments() const;
};

/// Vertices in descending |coeff| (ties lexicographic); edge iff the terms commute.
struct CommutationGraph {
  std::vector<PauliTerm> vertices;
  std::vector<std::vector<int>> adjacency;

  std::size_t edge_count() const;
};

CommutationGraph build_commutation_graph(const PauliSum& h);

QubitPartition group_lf(const PauliSum& h);
QubitPartition group_si(const PauliSum& h);

struct QubitRotationCount {
  int total = 0;
  std::vector<int> per_group;
};

QubitRotationCount qubit_rotation_count(const QubitPartition& p);

/// {method, n_qubits, constant, groups: [[{coeff, string}]]}; coefficients
/// are written as {"re", "im"} when complex.
std::string partition_to_json(const QubitPartition& p);
QubitPartition qubit_partition_from_json(const std::string& text);

}  // namespace trotterbench
