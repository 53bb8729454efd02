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

#include "trotterbench/qubit_map.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

#include "trotterbench/errors.hpp"

namespace trotterbench {

std::string to_string(Mapping m) { return m == Mapping::JordanWigner ? "jw" : "bk"; }

Mapping mapping_from_string(const std::string& name) {
  if (name == "jw") return Mapping::JordanWigner;
  if (name == "bk") return Mapping::BravyiKitaev;
  throw ValidationError("unknown mapping '" + name + "' (expected jw or bk)");
}

std::uint64_t bk_update_set(int mode, int n_qubits) {
  std::uint64_t set = 0;
  for (long long i = mode + 1 + ((mode + 1) & -(mode + 1)); i <= n_qubits; i += i & -i)
    set |= std::uint64_t{1} << (i - 1);
  return set;
}

std::uint64_t bk_parity_set(int mode) {
  std::uint64_t set = 0;
  for (long long i = mode; i > 0; i &= i - 1) set |= std::uint64_t{1} << (i - 1);
  return set;
}

std::uint64_t bk_occupation_set(int mode) {
  const long long index = mode + 1;
  std::uint64_t set = std::uint64_t{1} << mode;
  const long long parent = index & (index - 1);
  for (long long i = index - 1; i != parent; i &= i - 1) set |= std::uint64_t{1} << (i - 1);
  return set;
}

std::uint64_t bk_remainder_set(int mode) {
  return bk_parity_set(mode) & ~(bk_occupation_set(mode) & ~(std::uint64_t{1} << mode));
}

std::uint64_t bk_encode(std::uint64_t occupation, int n_qubits) {
  std::uint64_t out = 0;
  for (int k = 0; k < n_qubits; ++k) {
    const long long index = k + 1;
    const int low = static_cast<int>(index - (index & -index));
    const std::uint64_t range = (std::uint64_t{1} << (k + 1)) - (std::uint64_t{1} << low);
    if (std::popcount(occupation & range) % 2) out |= std::uint64_t{1} << k;
  }
  return out;
}

namespace {

struct Image {
  PauliString a;
  Complex ca;
  PauliString b;
  Complex cb;
};

Image image(Mapping m, int j, bool dagger, int n_qubits) {
  if (j < 0 || j >= n_qubits) throw BoundsError("mode " + std::to_string(j) + " outside the qubit register");
  const std::uint64_t bit = std::uint64_t{1} << j;
  const double sign = dagger ? -1.0 : 1.0;
  if (m == Mapping::JordanWigner) {
    const std::uint64_t lower = bit - 1;
    return {{bit, lower}, {0.5, 0.0}, {bit, lower | bit}, {0.0, 0.5 * sign}};
  }
  const std::uint64_t update = bk_update_set(j, n_qubits);
  return {{update | bit, bk_parity_set(j)}, {0.5, 0.0}, {update | bit, bk_remainder_set(j) | bit}, {0.0, 0.5 * sign}};
}

Complex i_power(int k) {
  static const Complex table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[k & 3];
}

struct StringHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.x * 0x9E3779B97F4A7C15ULL ^ (p.z + 0x632BE59BD9B4E019ULL));
  }
};

}  // namespace

PauliSum ladder_image(Mapping m, int mode, bool dagger, int n_qubits) {
  const auto im = image(m, mode, dagger, n_qubits);
  PauliSum out(n_qubits);
  out.add(im.a, im.ca);
  out.add(im.b, im.cb);
  return out;
}

PauliSum map_to_qubits(const FermionOperator& op, Mapping m, int n_qubits, double prune_tol) {
  op.validate();
  if (n_qubits < 0) n_qubits = op.n_modes;
  if (n_qubits < op.n_modes) throw DimensionError("fewer qubits than fermionic modes");
  std::vector<std::array<Image, 2>> cache(static_cast<std::size_t>(op.n_modes));
  for (int j = 0; j < op.n_modes; ++j)
    cache[static_cast<std::size_t>(j)] = {image(m, j, false, n_qubits), image(m, j, true, n_qubits)};

  std::unordered_map<PauliString, Complex, StringHash> acc;
  acc[PauliString{}] += op.constant;
  std::vector<std::pair<PauliString, Complex>> cur, next;
  for (const auto& term : op.terms) {
    if (term.coeff == 0.0) continue;
    cur.assign(1, {PauliString{}, Complex{term.coeff, 0.0}});
    for (const auto& lad : term.ops) {
      const Image& im = cache[static_cast<std::size_t>(lad.mode)][lad.dagger ? 1 : 0];
      next.clear();
      for (const auto& [p, c] : cur) {
        const auto pa = multiply(p, im.a);
        next.emplace_back(pa.result, c * im.ca * i_power(pa.phase));
        const auto pb = multiply(p, im.b);
        next.emplace_back(pb.result, c * im.cb * i_power(pb.phase));
      }
      std::swap(cur, next);
    }
    for (const auto& [p, c] : cur) acc[p] += c;
  }
  PauliSum out(n_qubits);
  for (const auto& [p, c] : acc) out.add(p, c);
  return std::move(out.prune(prune_tol));
}

PauliSum jordan_wigner(const FermionOperator& op) { return map_to_qubits(op, Mapping::JordanWigner); }
PauliSum bravyi_kitaev(const FermionOperator& op) { return map_to_qubits(op, Mapping::BravyiKitaev); }

PauliSum map_to_qubits(const MolecularTensors& t, Mapping m) { return map_to_qubits(to_fermion_operator(t), m); }

PauliSum map_to_qubits(const FermionFragment& f, Mapping m) { return map_to_qubits(f.tensors(), m); }

}  // namespace trotterbench
