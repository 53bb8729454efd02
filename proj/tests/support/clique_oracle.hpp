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

#include "pauli_oracle.hpp"

namespace oracle {

/// Commutation decided from explicit matrices.
inline std::vector<std::vector<bool>> commutation_table(const std::vector<std::string>& strings) {
  std::vector<CMatrix> m;
  for (const auto& s : strings) m.push_back(pauli_matrix(s));
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = (m[i] * m[j] - m[j] * m[i]).norm() < 1e-12;
  return c;
}

namespace detail {

inline bool colorable(const std::vector<std::vector<bool>>& c, std::vector<int>& color, std::size_t v, int k) {
  if (v == color.size()) return true;
  for (int col = 0; col < k; ++col) {
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) ok = color[u] != col || c[u][v];
    if (!ok) continue;
    color[v] = col;
    if (colorable(c, color, v + 1, k)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace detail

/// Exact minimum number of pairwise-commuting groups covering all strings.
inline int minimum_clique_cover(const std::vector<std::string>& strings) {
  const auto c = commutation_table(strings);
  for (int k = 1;; ++k) {
    std::vector<int> color(strings.size(), -1);
    if (detail::colorable(c, color, 0, k)) return k;
  }
}

}  // namespace oracle
