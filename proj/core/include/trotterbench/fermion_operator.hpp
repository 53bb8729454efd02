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

#include <vector>

#include "trotterbench/hamiltonian.hpp"

namespace trotterbench {

struct LadderOp {
  int mode;
  bool dagger;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/// A product of ladder operators, leftmost first, with a real coefficient.
struct FermionTerm {
  std::vector<LadderOp> ops;
  double coeff = 0.0;
};

/// Real linear combination of ladder-operator products plus a scalar.
struct FermionOperator {
  int n_modes = 0;
  double constant = 0.0;
  std::vector<FermionTerm> terms;

  /// Throws BoundsError for out-of-range modes, ValidationError for
  /// non-finite coefficients.
  void validate() const;

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator*=(double s);
};

FermionOperator operator+(FermionOperator a, const FermionOperator& b);

/// c + sum h_pq a+_p a_q + sum g_pqrs a+_p a_q a+_r a_s, dropping entries with
/// |value| <= drop_tol.
FermionOperator to_fermion_operator(const MolecularTensors& t, double drop_tol = 0.0);

FermionOperator number_operator(int n_modes, int p);

/// Particle number, S_z and S^2 with even modes spin up and odd modes spin down.
FermionOperator total_number(int n_modes);
FermionOperator spin_z(int n_modes);
FermionOperator spin_squared(int n_modes);

}  // namespace trotterbench
