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

#include "trotterbench/fermion_operator.hpp"

#include <cmath>
#include <string>

#include "trotterbench/errors.hpp"

namespace trotterbench {

void FermionOperator::validate() const {
  if (!std::isfinite(constant)) throw ValidationError("non-finite constant");
  for (const auto& term : terms) {
    if (!std::isfinite(term.coeff)) throw ValidationError("non-finite coefficient");
    for (const auto& op : term.ops) {
      if (op.mode < 0 || op.mode >= n_modes) {
        throw BoundsError("mode " + std::to_string(op.mode) + " outside [0, " +
                          std::to_string(n_modes) + ")");
      }
    }
  }
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  n_modes = std::max(n_modes, other.n_modes);
  constant += other.constant;
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

FermionOperator& FermionOperator::operator*=(double s) {
  constant *= s;
  for (auto& term : terms) term.coeff *= s;
  return *this;
}

FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }

FermionOperator to_fermion_operator(const MolecularTensors& t, double drop_tol) {
  const int n = t.n_spin();
  FermionOperator op;
  op.n_modes = n;
  op.constant = t.constant;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (std::abs(t.h(p, q)) > drop_tol) op.terms.push_back({{{p, true}, {q, false}}, t.h(p, q)});
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = t.g(p, q, r, s);
          if (std::abs(v) > drop_tol) op.terms.push_back({{{p, true}, {q, false}, {r, true}, {s, false}}, v});
        }
  return op;
}

FermionOperator number_operator(int n_modes, int p) {
  FermionOperator op;
  op.n_modes = n_modes;
  op.terms.push_back({{{p, true}, {p, false}}, 1.0});
  op.validate();
  return op;
}

FermionOperator total_number(int n_modes) {
  FermionOperator op;
  op.n_modes = n_modes;
  for (int p = 0; p < n_modes; ++p) op.terms.push_back({{{p, true}, {p, false}}, 1.0});
  return op;
}

FermionOperator spin_z(int n_modes) {
  FermionOperator op;
  op.n_modes = n_modes;
  for (int p = 0; p < n_modes; ++p) op.terms.push_back({{{p, true}, {p, false}}, p % 2 == 0 ? 0.5 : -0.5});
  return op;
}

FermionOperator spin_squared(int n_modes) {
  if (n_modes % 2) throw DimensionError("spin operators need an even number of modes");
  // S^2 = S- S+ + S_z + S_z^2 with S+ = sum_k a+_{k up} a_{k down}.
  FermionOperator op = spin_z(n_modes);
  const int m = n_modes / 2;
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      op.terms.push_back({{{2 * k + 1, true}, {2 * k, false}, {2 * l, true}, {2 * l + 1, false}}, 1.0});
  for (int p = 0; p < n_modes; ++p)
    for (int q = 0; q < n_modes; ++q) {
      const double sp = p % 2 == 0 ? 0.5 : -0.5, sq = q % 2 == 0 ? 0.5 : -0.5;
      op.terms.push_back({{{p, true}, {p, false}, {q, true}, {q, false}}, sp * sq});
    }
  return op;
}

}  // namespace trotterbench
