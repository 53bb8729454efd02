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

// Brute-force Fock-space reference built directly from occupation bitstrings.
// Shares no code with the library mappings.

#include <bit>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

struct Ladder {
  int mode;
  bool dagger;
};

// Applies a product of ladder operators (rightmost acts first) to a
// determinant. Returns the resulting determinant and sign, or nullopt.
inline std::optional<std::pair<std::uint64_t, double>> apply(const std::vector<Ladder>& ops,
                                                             std::uint64_t state) {
  double sign = 1.0;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const std::uint64_t bit = std::uint64_t{1} << it->mode;
    const bool occupied = (state & bit) != 0;
    if (occupied == it->dagger) return std::nullopt;
    if (std::popcount(state & (bit - 1)) % 2) sign = -sign;
    state ^= bit;
  }
  return std::make_pair(state, sign);
}

struct Basis {
  std::vector<std::uint64_t> states;
  std::vector<int> index;  // full 2^n map, -1 when excluded
};

// All determinants, or those with the given electron count and 2*Sz
// (even modes spin up, odd modes spin down).
inline Basis make_basis(int n, std::optional<int> electrons = {}, std::optional<int> two_sz = {}) {
  Basis b;
  b.index.assign(std::size_t{1} << n, -1);
  const std::uint64_t even = 0x5555555555555555ULL;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (electrons && std::popcount(s) != *electrons) continue;
    if (two_sz && std::popcount(s & even) - std::popcount(s & ~even) != *two_sz) continue;
    b.index[s] = static_cast<int>(b.states.size());
    b.states.push_back(s);
  }
  return b;
}

template <class H, class G>
Eigen::MatrixXd hamiltonian(int n, double constant, const H& h, const G& g, const Basis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.states.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim) * constant;
  for (Eigen::Index col = 0; col < dim; ++col) {
    const std::uint64_t s = basis.states[static_cast<std::size_t>(col)];
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (h(p, q) == 0.0) continue;
        if (auto r = apply({{p, true}, {q, false}}, s); r && basis.index[r->first] >= 0)
          m(basis.index[r->first], col) += h(p, q) * r->second;
      }
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int t = 0; t < n; ++t) {
            const double v = g(p, q, r, t);
            if (v == 0.0) continue;
            if (auto out = apply({{p, true}, {q, false}, {r, true}, {t, false}}, s);
                out && basis.index[out->first] >= 0)
              m(basis.index[out->first], col) += v * out->second;
          }
  }
  return m;
}

template <class T>
Eigen::MatrixXd hamiltonian(const T& tensors, const Basis& basis) {
  return hamiltonian(tensors.n_spin(), tensors.constant, tensors.h, tensors.g, basis);
}

inline double lowest(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

inline double highest(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

inline std::string fixture(const std::string& name) {
  return std::string(TROTTERBENCH_FIXTURE_DIR) + "/" + name;
}

// Reads a numeric field out of a fixture's meta.json without a JSON parser.
inline double meta_value(const std::string& molecule, const std::string& key) {
  std::ifstream in(fixture(molecule + ".meta.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 0.0;
  const auto colon = text.find(':', pos);
  return std::stod(text.substr(colon + 1));
}

}  // namespace oracle
