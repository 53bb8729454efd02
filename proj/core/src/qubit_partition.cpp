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

#include "trotterbench/qubit_partition.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "trotterbench/errors.hpp"

namespace trotterbench {

PauliGroup::PauliGroup(std::vector<PauliTerm> terms, int label) : terms_(std::move(terms)), label_(label) {
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (!pauli_commutes(terms_[i], terms_[j]))
        throw ValidationError("group " + std::to_string(label) + " contains anticommuting terms " +
                              to_string(terms_[i].string, terms_[i].n_qubits) + " and " +
                              to_string(terms_[j].string, terms_[j].n_qubits));
}

int PauliGroup::n_qubits() const { return terms_.empty() ? 0 : terms_.front().n_qubits; }

PauliSum PauliGroup::to_sum(int n_qubits) const {
  PauliSum s(n_qubits);
  for (const auto& t : terms_) s.add(t.string, t.coeff);
  return s;
}

std::vector<PauliSum> QubitPartition::fragments() const {
  std::vector<PauliSum> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(g.to_sum(source.n_qubits()));
  return out;
}

std::size_t CommutationGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& a : adjacency) e += a.size();
  return e / 2;
}

CommutationGraph build_commutation_graph(const PauliSum& h) {
  CommutationGraph g;
  g.vertices = h.sorted_terms();
  const std::size_t n = g.vertices.size();
  g.adjacency.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (commutes(g.vertices[i].string, g.vertices[j].string)) {
        g.adjacency[i].push_back(static_cast<int>(j));
        g.adjacency[j].push_back(static_cast<int>(i));
      }
  return g;
}

namespace {

QubitPartition start_partition(const std::string& method, const PauliSum& h) {
  QubitPartition p;
  p.method = method;
  p.source = h;
  p.constant = h.identity_coefficient().real();
  return p;
}

}  // namespace

QubitPartition group_lf(const PauliSum& h) {
  QubitPartition p = start_partition("fc-lf", h);
  const std::vector<PauliTerm> terms = h.without_identity().sorted_terms();
  const int n = static_cast<int>(terms.size());
  std::vector<std::vector<int>> anti(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!commutes(terms[i].string, terms[j].string)) {
        anti[i].push_back(j);
        anti[j].push_back(i);
      }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return anti[a].size() > anti[b].size(); });

  std::vector<int> color(n, -1);
  int n_colors = 0;
  std::vector<char> used;
  for (int v : order) {
    used.assign(n_colors + 1, 0);
    for (int u : anti[v])
      if (color[u] >= 0) used[color[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    n_colors = std::max(n_colors, c + 1);
  }
  std::vector<std::vector<PauliTerm>> classes(n_colors);
  for (int v = 0; v < n; ++v) classes[color[v]].push_back(terms[v]);
  for (int c = 0; c < n_colors; ++c) p.groups.emplace_back(std::move(classes[c]), c);
  return p;
}

QubitPartition group_si(const PauliSum& h) {
  QubitPartition p = start_partition("fc-si", h);
  std::vector<std::vector<PauliTerm>> groups;
  for (const auto& t : h.without_identity().sorted_terms()) {
    auto fits = [&](const std::vector<PauliTerm>& g) {
      return std::all_of(g.begin(), g.end(), [&](const PauliTerm& u) { return commutes(u.string, t.string); });
    };
    auto it = std::find_if(groups.begin(), groups.end(), fits);
    if (it == groups.end())
      groups.push_back({t});
    else
      it->push_back(t);
  }
  for (std::size_t c = 0; c < groups.size(); ++c) p.groups.emplace_back(std::move(groups[c]), static_cast<int>(c));
  return p;
}

QubitRotationCount qubit_rotation_count(const QubitPartition& p) {
  QubitRotationCount r;
  for (const auto& g : p.groups) {
    int k = 0;
    for (const auto& t : g.terms())
      if (!t.string.is_identity()) ++k;
    r.per_group.push_back(k);
    r.total += k;
  }
  return r;
}

namespace {

nlohmann::json coeff_json(Complex c) {
  if (c.imag() == 0.0) return c.real();
  return nlohmann::json{{"re", c.real()}, {"im", c.imag()}};
}

Complex coeff_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

std::string partition_to_json(const QubitPartition& p) {
  using nlohmann::json;
  const int n = p.source.n_qubits();
  json j;
  j["method"] = p.method;
  j["n_qubits"] = n;
  j["constant"] = p.constant;
  json groups = json::array();
  for (const auto& g : p.groups) {
    json jg = json::array();
    for (const auto& t : g.terms()) jg.push_back({{"coeff", coeff_json(t.coeff)}, {"string", to_string(t.string, n)}});
    groups.push_back(std::move(jg));
  }
  j["groups"] = std::move(groups);
  return j.dump(1);
}

QubitPartition qubit_partition_from_json(const std::string& text) {
  using nlohmann::json;
  QubitPartition p;
  try {
    const json j = json::parse(text);
    p.method = j.at("method").get<std::string>();
    const int n = j.at("n_qubits").get<int>();
    p.constant = j.value("constant", 0.0);
    p.source = PauliSum(n);
    if (p.constant != 0.0) p.source.add(PauliString{}, p.constant);
    int label = 0;
    for (const auto& jg : j.at("groups")) {
      std::vector<PauliTerm> terms;
      for (const auto& jt : jg) {
        const auto s = jt.at("string").get<std::string>();
        if (static_cast<int>(s.size()) != n) throw SchemaError("Pauli string length differs from n_qubits");
        PauliTerm t{n, parse_pauli(s), coeff_from_json(jt.at("coeff"))};
        if (p.source.coefficient(t.string) != Complex{}) throw SchemaError("term " + s + " appears in two groups");
        p.source.add(t);
        terms.push_back(t);
      }
      p.groups.emplace_back(std::move(terms), label++);
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("qubit partition JSON: ") + e.what());
  }
  return p;
}

}  // namespace trotterbench
