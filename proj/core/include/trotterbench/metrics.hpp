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
#include <vector>

#include "trotterbench/block_op.hpp"
#include "trotterbench/pauli.hpp"
#include "trotterbench/sparse_op.hpp"
#include "trotterbench/symmetry.hpp"

namespace trotterbench {

struct FragmentSpectrum {
  double e_min = 0.0;
  double e_max = 0.0;
  /// Pauli L1 norm without the identity part
  double l1_norm = 0.0;

  double range() const { return e_max - e_min; }
};

struct SpectralDescriptors {
  double beta = 0.0;
  double c = 0.0;
  double s_l = 0.0;
  std::vector<double> omega;
};

/// beta = sum_{i>j} dE_i dE_j, C = sum dE_i, omega_i = dE_i / C,
/// S_L = 1 - sum omega_i^2. Throws ValidationError for a negative range.
SpectralDescriptors spectral_descriptors(const std::vector<double>& ranges);

/// Sum of |c| over the non-identity terms.
double l1_bound(const PauliSum& fragment);

/// C^3 S_L / 2
double second_order_estimate(double c, double s_l);

struct TGateEstimate {
  double n_t = 0.0;
  double eps_t = 0.0;
  double eps_pe = 0.0;
  double eps_ht = 0.0;
};

/// N_T = 0.76 pi alpha N_R / (eps_T eps_PE) * [1.15 log2(N_R alpha / (eps_HT eps_T)) + 9.2]
/// with eps_HT = epsilon - eps_T - eps_PE.
double tgate_formula(double alpha, double n_r, double eps_t, double eps_pe, double epsilon);

/// Minimizes tgate_formula over (eps_T, eps_PE): a 128 x 128 log-spaced grid
/// over (0, epsilon) followed by shrinking local grids around the best point.
/// Throws InfeasibleError when no grid point has eps_HT > 0 and
/// ValidationError for non-positive inputs.
TGateEstimate tgate_count(double alpha, double n_r, double epsilon);

struct MetricOptions {
  CommutatorOptions commutator;
  /// Wall-clock budget for commutator jobs in seconds; <= 0 disables it.
  double time_budget = 0.0;
};

/// Fragments as blocked matrices over their common block structure, with a
/// cache of pairwise commutator norms.
class FragmentSet {
 public:
  FragmentSet(const std::vector<SparseOp>& ops, const MetricOptions& opts = {});
  /// Adds exact symplectic commutation checks that skip provably commuting pairs.
  FragmentSet(const std::vector<SparseOp>& ops, const std::vector<PauliSum>& paulis, const MetricOptions& opts = {});

  std::size_t size() const { return blocks_.size(); }
  const BlockStructure& structure() const { return structure_; }
  const std::vector<Extremes>& block_extremes(std::size_t i) const { return extremes_[i]; }
  Extremes extremes(std::size_t i) const { return combine(extremes_[i]); }

  double commutator_norm(std::size_t i, std::size_t j);
  /// Sum over ordered pairs i != j of ||[H_i, H_j]||.
  double alpha();
  /// sum_n ||[H_n, sum_{n' < n} H_n']||
  double alpha_ordered();

  /// false when the time budget stopped a sum early
  bool complete() const { return complete_; }
  std::size_t commutators_evaluated() const { return evaluated_; }
  std::size_t commutators_skipped() const { return skipped_; }

 private:
  bool out_of_time() const;

  MetricOptions opts_;
  BlockStructure structure_;
  std::vector<BlockedOp> blocks_;
  std::vector<std::vector<Extremes>> extremes_;
  std::vector<std::vector<double>> cache_;
  std::vector<PauliSum> paulis_;
  double start_ = 0.0;
  bool complete_ = true;
  std::size_t evaluated_ = 0;
  std::size_t skipped_ = 0;
};

double alpha(const std::vector<SparseOp>& fragments, const MetricOptions& opts = {});
double alpha_ordered(const std::vector<SparseOp>& fragments, const MetricOptions& opts = {});
double alpha_projected(const std::vector<SparseOp>& fragments, const SymmetrySector& sector,
                       const MetricOptions& opts = {});

}  // namespace trotterbench
