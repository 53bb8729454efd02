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

#include "trotterbench/block_op.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "trotterbench/errors.hpp"

namespace trotterbench {

namespace {

struct DisjointSets {
  std::vector<Eigen::Index> parent;

  explicit DisjointSets(Eigen::Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  }
  Eigen::Index find(Eigen::Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(Eigen::Index a, Eigen::Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void apply_real(const Eigen::MatrixXd& a, const CVector& x, CVector& y) {
  const Eigen::VectorXd re = a * x.real(), im = a * x.imag();
  y.resize(x.size());
  y.real() = re;
  y.imag() = im;
}

template <class M>
double dense_commutator_norm(const M& a, const M& b) {
  const M ab = a * b;
  const M c = ab - ab.adjoint();
  const M g = c.adjoint() * c;
  const auto e = dense_extremes(g);
  return std::sqrt(std::max(0.0, e.max));
}

double max_entry(const SparseOp& op) {
  double m = 0.0;
  for (Eigen::Index k = 0; k < op.matrix.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(op.matrix, k); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

}  // namespace

Eigen::Index BlockStructure::largest() const {
  Eigen::Index m = 0;
  for (const auto& b : blocks) m = std::max<Eigen::Index>(m, static_cast<Eigen::Index>(b.size()));
  return m;
}

BlockStructure common_blocks(const std::vector<const SparseOp*>& ops, double rel_tol) {
  BlockStructure s;
  if (ops.empty()) return s;
  s.dim = ops.front()->dim();
  DisjointSets sets(s.dim);
  for (const SparseOp* op : ops) {
    if (op->dim() != s.dim) throw DimensionError("operators of different dimensions");
    const double cutoff = rel_tol * max_entry(*op);
    for (Eigen::Index k = 0; k < op->matrix.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(op->matrix, k); it; ++it)
        if (std::abs(it.value()) > cutoff) sets.unite(it.row(), it.col());
  }
  std::vector<Eigen::Index> index_of(static_cast<std::size_t>(s.dim), -1);
  for (Eigen::Index i = 0; i < s.dim; ++i) {
    const Eigen::Index r = sets.find(i);
    if (index_of[r] < 0) {
      index_of[r] = static_cast<Eigen::Index>(s.blocks.size());
      s.blocks.emplace_back();
    }
    s.blocks[index_of[r]].push_back(i);
  }
  return s;
}

BlockStructure common_blocks(const std::vector<SparseOp>& ops, double rel_tol) {
  std::vector<const SparseOp*> ptrs;
  for (const auto& op : ops) ptrs.push_back(&op);
  return common_blocks(ptrs, rel_tol);
}

bool BlockedOp::block_is_zero(std::size_t k) const { return real ? re[k].isZero(0.0) : cx[k].isZero(0.0); }

BlockedOp& BlockedOp::operator+=(const BlockedOp& other) {
  if (other.block_count() != block_count()) throw DimensionError("blocked operators over different structures");
  if (real && !other.real) {
    for (const auto& m : re) cx.push_back(m.cast<Complex>());
    re.clear();
    real = false;
  }
  for (std::size_t k = 0; k < block_count(); ++k) {
    if (block_dim(k) != other.block_dim(k)) throw DimensionError("blocked operators over different structures");
    if (real)
      re[k] += other.re[k];
    else if (other.real)
      cx[k] += other.re[k].cast<Complex>();
    else
      cx[k] += other.cx[k];
  }
  return *this;
}

BlockedOp to_blocks(const SparseOp& op, const BlockStructure& s, double rel_tol) {
  if (op.dim() != s.dim) throw DimensionError("operator dimension differs from the block structure");
  std::vector<std::size_t> block_of(static_cast<std::size_t>(s.dim));
  std::vector<Eigen::Index> local(static_cast<std::size_t>(s.dim));
  for (std::size_t b = 0; b < s.blocks.size(); ++b)
    for (std::size_t i = 0; i < s.blocks[b].size(); ++i) {
      block_of[s.blocks[b][i]] = b;
      local[s.blocks[b][i]] = static_cast<Eigen::Index>(i);
    }
  BlockedOp out;
  out.real = op.is_real();
  for (const auto& b : s.blocks) {
    const auto d = static_cast<Eigen::Index>(b.size());
    if (out.real)
      out.re.push_back(Eigen::MatrixXd::Zero(d, d));
    else
      out.cx.push_back(CMatrix::Zero(d, d));
  }
  const double cutoff = rel_tol * max_entry(op);
  for (Eigen::Index k = 0; k < op.matrix.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(op.matrix, k); it; ++it) {
      const std::size_t b = block_of[it.row()];
      if (block_of[it.col()] != b) {
        if (std::abs(it.value()) <= cutoff) continue;
        throw DimensionError("operator couples different blocks");
      }
      if (out.real)
        out.re[b](local[it.row()], local[it.col()]) = it.value().real();
      else
        out.cx[b](local[it.row()], local[it.col()]) = it.value();
    }
  return out;
}

std::vector<Extremes> block_extremes(const BlockedOp& a, const EigenOptions& opts) {
  std::vector<Extremes> out;
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const Eigen::Index d = a.block_dim(k);
    if (d <= opts.dense_limit) {
      out.push_back(a.real ? dense_extremes(a.re[k]) : dense_extremes(a.cx[k]));
    } else if (a.real) {
      out.push_back(lanczos_extremes(
          d, [&](const CVector& x, CVector& y) { apply_real(a.re[k], x, y); }, opts));
    } else {
      out.push_back(lanczos_extremes(
          d, [&](const CVector& x, CVector& y) { y.noalias() = a.cx[k] * x; }, opts));
    }
  }
  return out;
}

Extremes combine(const std::vector<Extremes>& per_block) {
  if (per_block.empty()) return {};
  Extremes e = per_block.front();
  for (const auto& b : per_block) {
    e.min = std::min(e.min, b.min);
    e.max = std::max(e.max, b.max);
  }
  return e;
}

namespace {

// residual floor relative to an a priori bound on the commutator norm
constexpr double kCommutatorAbsTolerance = 1e-12;

double block_frobenius(const BlockedOp& a, std::size_t k) { return a.real ? a.re[k].norm() : a.cx[k].norm(); }

}  // namespace

double commutator_norm(const BlockedOp& a, const BlockedOp& b, const CommutatorOptions& opts,
                       const std::vector<Extremes>* ext_a, const std::vector<Extremes>* ext_b) {
  if (a.block_count() != b.block_count()) throw DimensionError("blocked operators over different structures");
  const std::size_t n = a.block_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> bound(n, std::numeric_limits<double>::infinity());
  if (ext_a && ext_b) {
    for (std::size_t k = 0; k < n; ++k) bound[k] = 0.5 * (*ext_a)[k].range() * (*ext_b)[k].range();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return bound[i] > bound[j]; });
  }
  double best = 0.0;
  for (std::size_t k : order) {
    if (bound[k] <= best) break;
    const Eigen::Index d = a.block_dim(k);
    if (d < 2 || a.block_is_zero(k) || b.block_is_zero(k)) continue;
    double v = 0.0;
    EigenOptions eig = opts.eigen;
    const double scale = std::isfinite(bound[k]) ? bound[k] : 2.0 * block_frobenius(a, k) * block_frobenius(b, k);
    eig.abs_tolerance = std::max(eig.abs_tolerance, kCommutatorAbsTolerance * scale);
    if (a.real && b.real) {
      if (d <= opts.dense_limit) {
        v = dense_commutator_norm(a.re[k], b.re[k]);
      } else {
        CVector t1, t2;
        v = lanczos_extremes(
                d,
                [&](const CVector& x, CVector& y) {
                  apply_real(b.re[k], x, t1);
                  apply_real(a.re[k], t1, y);
                  apply_real(a.re[k], x, t1);
                  apply_real(b.re[k], t1, t2);
                  y = Complex(0.0, 1.0) * (y - t2);
                },
                eig)
                .norm();
      }
    } else {
      const CMatrix ca = a.real ? CMatrix(a.re[k].cast<Complex>()) : a.cx[k];
      const CMatrix cb = b.real ? CMatrix(b.re[k].cast<Complex>()) : b.cx[k];
      if (d <= opts.dense_limit) {
        v = dense_commutator_norm(ca, cb);
      } else {
        CVector t1, t2;
        v = lanczos_extremes(
                d,
                [&](const CVector& x, CVector& y) {
                  t1.noalias() = cb * x;
                  y.noalias() = ca * t1;
                  t1.noalias() = ca * x;
                  t2.noalias() = cb * t1;
                  y = Complex(0.0, 1.0) * (y - t2);
                },
                eig)
                .norm();
      }
    }
    best = std::max(best, v);
  }
  return best;
}

GroundState ground_state(const SparseOp& h, const EigenOptions& opts) {
  const BlockStructure s = common_blocks(std::vector<const SparseOp*>{&h});
  const BlockedOp b = to_blocks(h, s);
  GroundState best;
  best.energy = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < b.block_count(); ++k) {
    const Eigen::Index d = b.block_dim(k);
    double e = 0.0;
    CVector v;
    if (d <= opts.dense_limit) {
      const CMatrix m = b.real ? CMatrix(b.re[k].cast<Complex>()) : b.cx[k];
      Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
      if (es.info() != Eigen::Success) throw ConvergenceError("dense Hermitian eigensolver failed", 0.0);
      e = es.eigenvalues()[0];
      v = es.eigenvectors().col(0);
    } else if (b.real) {
      e = lanczos_extremes(
              d, [&](const CVector& x, CVector& y) { apply_real(b.re[k], x, y); }, opts, nullptr, &v)
              .min;
    } else {
      e = lanczos_extremes(
              d, [&](const CVector& x, CVector& y) { y.noalias() = b.cx[k] * x; }, opts, nullptr, &v)
              .min;
    }
    if (e < best.energy - 1e-10) {
      best.energy = e;
      best.vector = CVector::Zero(h.dim());
      for (Eigen::Index i = 0; i < d; ++i) best.vector[s.blocks[k][i]] = v[i];
    }
  }
  return best;
}

}  // namespace trotterbench
