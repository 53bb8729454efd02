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

#include "trotterbench/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "trotterbench/errors.hpp"
#include "trotterbench/fermion_operator.hpp"

namespace trotterbench {

SpinOperators build_spin_operators(int n_spin, Mapping mapping) {
  return {to_sparse(map_to_qubits(total_number(n_spin), mapping)), to_sparse(map_to_qubits(spin_z(n_spin), mapping)),
          to_sparse(map_to_qubits(spin_squared(n_spin), mapping))};
}

std::vector<PauliTerm> find_pauli_symmetries(const std::vector<PauliSum>& fragments) {
  if (fragments.empty()) return {};
  const int n = fragments.front().n_qubits();
  if (n > 32) throw BoundsError("symmetry search supports at most 32 qubits");
  for (const auto& f : fragments)
    if (f.n_qubits() != n) throw DimensionError("fragments act on different qubit counts");

  // Unknown u = (qx | qz << n). A term (x, z) commutes with Q iff
  // |z & qx| + |x & qz| is even, i.e. the row (z | x << n) is orthogonal to u.
  std::vector<std::uint64_t> rows;
  for (const auto& f : fragments)
    for (const auto& [p, c] : f.terms())
      if (!p.is_identity()) rows.push_back(p.z | (p.x << n));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  const int cols = 2 * n;
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t r = rank;
    while (r < rows.size() && !(rows[r] & bit)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<PauliTerm> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::uint64_t u = std::uint64_t{1} << f;
    for (std::size_t r = 0; r < rank; ++r)
      if (rows[r] & (std::uint64_t{1} << f)) u |= std::uint64_t{1} << pivot_col[r];
    const std::uint64_t low = (n == 32) ? 0xffffffffULL : ((std::uint64_t{1} << n) - 1);
    const PauliString q{u & low, u >> n};
    for (const auto& frag : fragments)
      for (const auto& [p, c] : frag.terms())
        if (!commutes(p, q)) throw InternalError("symmetry candidate fails the commutation check");
    out.push_back({n, q, 1.0});
  }
  std::stable_sort(out.begin(), out.end(), [](const PauliTerm& a, const PauliTerm& b) {
    const bool za = a.string.x == 0, zb = b.string.x == 0;
    if (za != zb) return za;
    if (a.string.weight() != b.string.weight()) return a.string.weight() < b.string.weight();
    return lexicographic_less(a.string, b.string);
  });
  return out;
}

std::vector<PauliTerm> find_pauli_symmetries(const QubitPartition& p) { return find_pauli_symmetries(p.fragments()); }

std::vector<PauliTerm> commuting_subset(const std::vector<PauliTerm>& symmetries) {
  std::vector<PauliTerm> out;
  for (const auto& s : symmetries)
    if (std::all_of(out.begin(), out.end(), [&](const PauliTerm& t) { return commutes(t.string, s.string); }))
      out.push_back(s);
  return out;
}

std::string describe(const SectorLabels& labels) {
  std::ostringstream os;
  if (const auto* f = std::get_if<FermionicLabels>(&labels)) {
    os << "eta=" << f->electrons << " m=" << f->sz;
    if (f->spin) os << " s=" << *f->spin;
  } else {
    const auto& q = std::get<QubitLabels>(labels);
    for (std::size_t i = 0; i < q.symmetries.size(); ++i) {
      if (i) os << ' ';
      os << (q.zeta[i] > 0 ? '+' : '-') << to_string(q.symmetries[i].string, q.symmetries[i].n_qubits);
    }
    if (q.symmetries.empty()) os << "full";
  }
  return os.str();
}

namespace {

std::vector<std::uint64_t> occupation_of_states(int n, Mapping mapping) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::uint64_t> occ(dim);
  for (std::uint64_t o = 0; o < dim; ++o) occ[mapping == Mapping::JordanWigner ? o : bk_encode(o, n)] = o;
  return occ;
}

}  // namespace

SymmetrySector fermionic_sector(int n_spin, Mapping mapping, const FermionicLabels& labels) {
  if (n_spin > kDefaultMaxQubits)
    throw ResourceError("fermionic sector on " + std::to_string(n_spin) + " modes exceeds the qubit cap");
  const auto occ = occupation_of_states(n_spin, mapping);
  std::uint64_t up_mask = 0;
  for (int p = 0; p < n_spin; p += 2) up_mask |= std::uint64_t{1} << p;
  const long two_sz = std::lround(2.0 * labels.sz);
  if (std::abs(2.0 * labels.sz - static_cast<double>(two_sz)) > 1e-12)
    throw ValidationError("S_z label must be a multiple of 1/2");

  std::vector<Eigen::Index> states;
  for (std::size_t b = 0; b < occ.size(); ++b) {
    const int up = std::popcount(occ[b] & up_mask), down = std::popcount(occ[b] & ~up_mask);
    if (up + down == labels.electrons && up - down == two_sz) states.push_back(static_cast<Eigen::Index>(b));
  }
  const auto full = static_cast<Eigen::Index>(occ.size());
  const auto d = static_cast<Eigen::Index>(states.size());
  SymmetrySector sec;
  sec.labels = labels;
  if (d == 0) throw EmptySectorError("no states with " + describe(labels));

  if (!labels.spin) {
    sec.basis.resize(full, d);
    std::vector<Eigen::Triplet<Complex>> t;
    for (Eigen::Index j = 0; j < d; ++j) t.emplace_back(states[j], j, 1.0);
    sec.basis.setFromTriplets(t.begin(), t.end());
    return sec;
  }
  const SparseOp s2 = to_sparse(map_to_qubits(spin_squared(n_spin), mapping));
  CMatrix block(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) block(i, j) = s2.matrix.coeff(states[i], states[j]);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(block);
  const double target = *labels.spin * (*labels.spin + 1.0);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < d; ++k)
    if (std::abs(es.eigenvalues()[k] - target) <= 1e-8) keep.push_back(k);
  if (keep.empty()) throw EmptySectorError("no states with " + describe(labels));
  sec.basis.resize(full, static_cast<Eigen::Index>(keep.size()));
  std::vector<Eigen::Triplet<Complex>> t;
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (Eigen::Index i = 0; i < d; ++i) {
      const Complex v = es.eigenvectors()(i, keep[j]);
      if (v != Complex{}) t.emplace_back(states[i], static_cast<Eigen::Index>(j), v);
    }
  sec.basis.setFromTriplets(t.begin(), t.end());
  return sec;
}

SymmetrySector qubit_sector(const std::vector<PauliTerm>& symmetries, const std::vector<int>& zeta, int n_qubits) {
  if (symmetries.size() != zeta.size()) throw DimensionError("one label per symmetry is required");
  if (n_qubits > kDefaultMaxQubits)
    throw ResourceError("qubit sector on " + std::to_string(n_qubits) + " qubits exceeds the cap");
  for (std::size_t i = 0; i < symmetries.size(); ++i) {
    if (zeta[i] != 1 && zeta[i] != -1) throw ValidationError("symmetry labels must be +1 or -1");
    for (std::size_t j = i + 1; j < symmetries.size(); ++j)
      if (!commutes(symmetries[i].string, symmetries[j].string))
        throw ValidationError("sector symmetries must commute pairwise");
  }
  PauliSum projector(n_qubits);
  projector.add(PauliString{}, 1.0);
  std::vector<std::uint64_t> span{0};
  for (std::size_t i = 0; i < symmetries.size(); ++i) {
    PauliSum factor(n_qubits);
    factor.add(PauliString{}, 0.5);
    factor.add(symmetries[i].string, 0.5 * zeta[i]);
    projector = projector * factor;
    projector.prune();
    const std::uint64_t x = symmetries[i].string.x;
    if (std::find(span.begin(), span.end(), x) == span.end()) {
      const std::size_t m = span.size();
      for (std::size_t k = 0; k < m; ++k)
        if (std::find(span.begin(), span.end(), span[k] ^ x) == span.end()) span.push_back(span[k] ^ x);
    }
  }
  const SparseOp p = to_sparse(projector, n_qubits);
  const std::uint64_t full = std::uint64_t{1} << n_qubits;
  std::vector<bool> seen(full, false);
  std::vector<Eigen::Triplet<Complex>> t;
  Eigen::Index col = 0;
  // P e_b is supported on the coset b + span(x-parts) and is the same ray for
  // every member of the coset, so one column per coset suffices.
  for (std::uint64_t b = 0; b < full; ++b) {
    if (seen[b]) continue;
    for (std::uint64_t s : span) seen[b ^ s] = true;
    const CVector v = CMatrix(p.matrix.col(static_cast<Eigen::Index>(b)));
    const double norm = v.norm();
    if (norm < 1e-10) continue;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > 1e-14) t.emplace_back(i, col, v[i] / norm);
    ++col;
  }
  QubitLabels labels{symmetries, zeta};
  if (col == 0) throw EmptySectorError("no states with " + describe(labels));
  SymmetrySector sec;
  sec.labels = labels;
  sec.basis.resize(static_cast<Eigen::Index>(full), col);
  sec.basis.setFromTriplets(t.begin(), t.end());
  return sec;
}

SymmetrySector full_space(int n_qubits) { return qubit_sector({}, {}, n_qubits); }

SparseOp project(const SparseOp& a, const SymmetrySector& sector, double* leakage) {
  if (a.dim() != sector.full_dim()) throw DimensionError("operator and sector dimensions differ");
  const SparseMatrix ab = a.matrix * sector.basis;
  SparseMatrix adj = sector.basis.adjoint();
  SparseMatrix reduced = adj * ab;
  if (leakage) {
    const SparseMatrix back = sector.basis * reduced;
    *leakage = (ab - back).norm();
  }
  return from_matrix(std::move(reduced));
}

std::vector<int> measure_labels(const std::vector<PauliTerm>& symmetries, const CVector& state) {
  std::vector<int> out;
  for (const auto& s : symmetries) {
    PauliSum q(s.n_qubits);
    q.add(s.string, 1.0);
    const SparseOp op = to_sparse(q, s.n_qubits);
    if (op.dim() != state.size()) throw DimensionError("state and symmetry dimensions differ");
    const double e = state.dot(op.matrix * state).real() / state.squaredNorm();
    out.push_back(std::abs(std::abs(e) - 1.0) <= 1e-6 ? (e > 0 ? 1 : -1) : 0);
  }
  return out;
}

}  // namespace trotterbench
