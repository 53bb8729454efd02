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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "trotterbench/fermionic_partition.hpp"
#include "trotterbench/qubit_map.hpp"
#include "trotterbench/report.hpp"

namespace trotterbench {

enum class Method { Lr, Fro, Gfro, SdGfro, LrLcu, GfroLcu, FcLf, FcSi };

std::string to_string(Method m);
/// Throws ConfigError for unknown names.
Method method_from_string(const std::string& name);
bool is_fermionic(Method m);
std::vector<Method> all_methods();

struct Caps {
  int max_qubits = kDefaultMaxQubits;
  /// GFRO/SD-GFRO fragment cap; the fragment count for FRO
  int max_fragments = 40;
  /// seconds for commutator jobs; <= 0 means unlimited
  double time_budget = 0.0;
};

struct RunConfig {
  std::filesystem::path input;
  Method method = Method::Gfro;
  Mapping mapping = Mapping::BravyiKitaev;
  double threshold = 1e-6;
  std::uint64_t seed = 7;
  /// "auto-neutral-ground", "full", or "eta=<n>,m=<sz>[,s=<spin>]"
  std::string sector = "auto-neutral-ground";
  double epsilon = 1e-3;
  Caps caps;

  /// Throws ConfigError.
  void validate() const;
  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
};

/// Partition step alone: fermionic or qubit fragments of the input.
struct Partition {
  Method method = Method::Gfro;
  std::optional<FermionPartition> fermionic;
  std::optional<QubitPartition> qubit;
  /// qubit image of each fragment
  std::vector<PauliSum> fragments;
  long long n_r = 0;

  std::string to_json() const;
};

Partition make_partition(const MolecularTensors& t, const RunConfig& config);

struct RunResult {
  TrotterReport report;
  std::string partition_json;
  std::string provenance_json;
};

/// Loads the input, partitions, resolves the sector and builds the report.
/// A ResourceError from the metric stage yields a report with complete =
/// false and no metric values.
RunResult run(const RunConfig& config);

/// Writes <stem>.partition.json, <stem>.report.json, <stem>.report.csv and
/// <stem>.provenance.json into dir, with stem = molecule_method. Returns the
/// paths written.
std::vector<std::filesystem::path> write_artifacts(const RunResult& r, const std::filesystem::path& dir);

MolecularTensors load_input(const std::filesystem::path& path);

/// Merged CSV sorted by molecule, then figure of merit, then method. A
/// trailing "flag" column marks rows whose epsilon differs from the first
/// report's. Throws ConfigError for fewer than two reports.
std::string compare(const std::vector<TrotterReport>& reports);

/// FNV-1a 64-bit digest as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace trotterbench
