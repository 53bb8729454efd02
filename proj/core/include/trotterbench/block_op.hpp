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

#include "trotterbench/sparse_op.hpp"

namespace trotterbench {

/// Partition of the basis states into the connected components of a
/// sparsity pattern. Blocks are ordered by their smallest state.
struct BlockStructure {
  Eigen::Index dim = 0;
  std::vector<std::vector<Eigen::Index>> blocks;

  Eigen::Index largest() const;
};

inline constexpr double kCouplingTolerance = 1e-12;

/// Components of the union of the nonzero patterns of all operators; every
/// operator is block diagonal in the result. Entries with
/// |v| <= rel_tol * max|v| of their operator are rounding noise and ignored.
BlockStructure common_blocks(const std::vector<const SparseOp*>& ops, double rel_tol = kCouplingTolerance);
BlockStructure common_blocks(const std::vector<SparseOp>& ops, double rel_tol = kCouplingTolerance);

/// Dense blocks of one operator over a BlockStructure. Real operators keep
/// real storage.
struct BlockedOp {
  bool real = true;
  std::vector<Eigen::MatrixXd> re;
  std::vector<CMatrix> cx;

  std::size_t block_count() const { return real ? re.size() : cx.size(); }
  Eigen::Index block_dim(std::size_t k) const { return real ? re[k].rows() : cx[k].rows(); }
  bool block_is_zero(std::size_t k) const;

  BlockedOp& operator+=(const BlockedOp& other);
};

/// Drops couplings between blocks up to rel_tol * max|v| and throws
/// DimensionError for larger ones.
BlockedOp to_blocks(const SparseOp& op, const BlockStructure& s, double rel_tol = kCouplingTolerance);

std::vector<Extremes> block_extremes(const BlockedOp& a, const EigenOptions& opts = {});
Extremes combine(const std::vector<Extremes>& per_block);

struct CommutatorOptions {
  EigenOptions eigen;
  /// Blocks up to this size are handled by forming the commutator densely.
  Eigen::Index dense_limit = 128;
};

/// max over blocks of ||[a_k, b_k]||. When per-block extremes of both
/// operators are supplied, blocks are visited by decreasing upper bound
/// (range_a * range_b / 2) and skipped once the bound cannot beat the
/// running maximum.
double commutator_norm(const BlockedOp& a, const BlockedOp& b, const CommutatorOptions& opts = {},
                       const std::vector<Extremes>* ext_a = nullptr, const std::vector<Extremes>* ext_b = nullptr);

struct GroundState {
  double energy = 0.0;
  CVector vector;
};

/// Lowest eigenpair, solved per connected block of h. Among degenerate
/// blocks (within 1e-10) the one with the smallest state index wins.
GroundState ground_state(const SparseOp& h, const EigenOptions& opts = {});

}  // namespace trotterbench
