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

#include "trotterbench/metrics.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "trotterbench/errors.hpp"

namespace trotterbench {

namespace {

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

bool all_commute(const PauliSum& a, const PauliSum& b) {
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, d] : b.terms())
      if (!commutes(p, q)) return false;
  return true;
}

}  // namespace

SpectralDescriptors spectral_descriptors(const std::vector<double>& ranges) {
  SpectralDescriptors d;
  for (double r : ranges) {
    if (!(r >= 0.0)) throw ValidationError("spectral ranges must be non-negative");
    d.c += r;
  }
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) d.beta += ranges[i] * ranges[j];
  if (d.c > 0.0) {
    double w2 = 0.0;
    for (double r : ranges) {
      d.omega.push_back(r / d.c);
      w2 += d.omega.back() * d.omega.back();
    }
    d.s_l = 1.0 - w2;
  }
  return d;
}

double l1_bound(const PauliSum& fragment) { return fragment.l1_norm(); }

double second_order_estimate(double c, double s_l) { return c * c * c * s_l / 2.0; }

double tgate_formula(double alpha, double n_r, double eps_t, double eps_pe, double epsilon) {
  const double eps_ht = epsilon - eps_t - eps_pe;
  if (eps_t <= 0.0 || eps_pe <= 0.0 || eps_ht <= 0.0) return std::numeric_limits<double>::infinity();
  return 0.76 * std::numbers::pi * alpha * n_r / (eps_t * eps_pe) *
         (1.15 * std::log2(n_r * alpha / (eps_ht * eps_t)) + 9.2);
}

TGateEstimate tgate_count(double alpha, double n_r, double epsilon) {
  if (!(alpha > 0.0) || !(n_r >= 1.0) || !(epsilon > 0.0))
    throw ValidationError("T-gate model needs alpha > 0, N_R >= 1 and epsilon > 0");
  constexpr int kGrid = 128;
  constexpr double kLowest = 1e-8;  // smallest grid fraction of epsilon
  auto fraction = [&](int i) { return std::pow(kLowest, 1.0 - static_cast<double>(i) / (kGrid - 1)); };

  double best = std::numeric_limits<double>::infinity();
  double lt = 0.0, lp = 0.0;  // log of the fractions at the best point
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < kGrid; ++j) {
      const double ft = fraction(i), fp = fraction(j);
      const double v = tgate_formula(alpha, n_r, ft * epsilon, fp * epsilon, epsilon);
      if (v < best) {
        best = v;
        lt = std::log(ft);
        lp = std::log(fp);
      }
    }
  if (!std::isfinite(best)) throw InfeasibleError("no (eps_T, eps_PE) split leaves eps_HT > 0");

  double step = -std::log(kLowest) / (kGrid - 1);
  for (int round = 0; round < 60; ++round) {
    const double ct = lt, cp = lp;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) {
        const double at = ct + i * step / 4.0, ap = cp + j * step / 4.0;
        if (at >= 0.0 || ap >= 0.0) continue;
        const double v = tgate_formula(alpha, n_r, std::exp(at) * epsilon, std::exp(ap) * epsilon, epsilon);
        if (v < best) {
          best = v;
          lt = at;
          lp = ap;
        }
      }
    step /= 2.0;
  }
  TGateEstimate e;
  e.n_t = best;
  e.eps_t = std::exp(lt) * epsilon;
  e.eps_pe = std::exp(lp) * epsilon;
  e.eps_ht = epsilon - e.eps_t - e.eps_pe;
  return e;
}

FragmentSet::FragmentSet(const std::vector<SparseOp>& ops, const MetricOptions& opts) : opts_(opts) {
  structure_ = common_blocks(ops);
  for (const auto& op : ops) {
    blocks_.push_back(to_blocks(op, structure_));
    extremes_.push_back(trotterbench::block_extremes(blocks_.back(), opts_.commutator.eigen));
  }
  cache_.assign(ops.size(), std::vector<double>(ops.size(), -1.0));
  start_ = now_seconds();
}

FragmentSet::FragmentSet(const std::vector<SparseOp>& ops, const std::vector<PauliSum>& paulis,
                         const MetricOptions& opts)
    : FragmentSet(ops, opts) {
  if (paulis.size() != ops.size()) throw DimensionError("one Pauli sum per fragment is required");
  paulis_ = paulis;
}

bool FragmentSet::out_of_time() const {
  return opts_.time_budget > 0.0 && now_seconds() - start_ > opts_.time_budget;
}

double FragmentSet::commutator_norm(std::size_t i, std::size_t j) {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  double& slot = cache_[i][j];
  if (slot >= 0.0) return slot;
  if (!paulis_.empty() && all_commute(paulis_[i], paulis_[j])) {
    ++skipped_;
    return slot = 0.0;
  }
  ++evaluated_;
  return slot = trotterbench::commutator_norm(blocks_[i], blocks_[j], opts_.commutator, &extremes_[i], &extremes_[j]);
}

double FragmentSet::alpha() {
  double sum = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (cache_[i][j] < 0.0 && out_of_time()) {
        complete_ = false;
        return 2.0 * sum;
      }
      sum += commutator_norm(i, j);
    }
  return 2.0 * sum;
}

double FragmentSet::alpha_ordered() {
  if (size() < 2) return 0.0;
  double sum = commutator_norm(0, 1);
  BlockedOp prefix = blocks_[0];
  for (std::size_t n = 2; n < size(); ++n) {
    if (out_of_time()) {
      complete_ = false;
      return sum;
    }
    prefix += blocks_[n - 1];
    ++evaluated_;
    sum += trotterbench::commutator_norm(blocks_[n], prefix, opts_.commutator);
  }
  return sum;
}

double alpha(const std::vector<SparseOp>& fragments, const MetricOptions& opts) {
  FragmentSet s(fragments, opts);
  return s.alpha();
}

double alpha_ordered(const std::vector<SparseOp>& fragments, const MetricOptions& opts) {
  FragmentSet s(fragments, opts);
  return s.alpha_ordered();
}

double alpha_projected(const std::vector<SparseOp>& fragments, const SymmetrySector& sector,
                       const MetricOptions& opts) {
  std::vector<SparseOp> projected;
  for (const auto& f : fragments) projected.push_back(project(f, sector));
  return alpha(projected, opts);
}

}  // namespace trotterbench
