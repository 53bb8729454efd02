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

#include "trotterbench/metrics.hpp"
#include "trotterbench/qubit_map.hpp"

namespace trotterbench {

struct TrotterReport {
  std::string method;
  std::string molecule;
  std::string mapping;
  std::string sector;
  int gamma = 0;
  double alpha = 0.0;
  double alpha_ordered = 0.0;
  double alpha_q = 0.0;
  double beta = 0.0;
  double beta_q = 0.0;
  double c = 0.0;
  double c_q = 0.0;
  double s_l = 0.0;
  double s_l_q = 0.0;
  double second_order = 0.0;
  long long n_r = 0;
  double figure_of_merit = 0.0;  // alpha_q * n_r
  double epsilon = 0.0;
  TGateEstimate tgate;
  /// two-body L1 left out of the fragments (fermionic fits only)
  double residual_l1 = 0.0;
  std::vector<FragmentSpectrum> fragments;
  std::vector<double> ranges_q;
  bool complete = true;
  std::vector<std::string> diagnostics;
};

struct MetricInput {
  std::string method;
  std::string molecule;
  Mapping mapping = Mapping::BravyiKitaev;
  /// qubit images of the fragments, identity parts included
  std::vector<PauliSum> fragments;
  long long n_r = 0;
  std::optional<SymmetrySector> sector;
  /// used instead of sector when a fragment leaks out of it by more than 1e-6
  std::optional<SymmetrySector> fallback_sector;
  double epsilon = 1e-3;
  double residual_l1 = 0.0;
  /// skip commutators of termwise-commuting Pauli sums
  bool pauli_pruning = false;
  MetricOptions options;
  int max_qubits = kDefaultMaxQubits;
};

inline constexpr double kLeakageTolerance = 1e-6;

TrotterReport build_report(const MetricInput& in);

std::string report_to_json(const TrotterReport& r);
TrotterReport report_from_json(const std::string& text);

std::vector<std::string> report_csv_columns();
std::string report_csv_header();
std::string report_csv_row(const TrotterReport& r);

}  // namespace trotterbench
