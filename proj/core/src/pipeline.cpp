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

#include "trotterbench/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "trotterbench/block_op.hpp"
#include "trotterbench/errors.hpp"
#include "trotterbench/symmetry.hpp"

#ifndef TROTTERBENCH_VERSION
#define TROTTERBENCH_VERSION "unknown"
#endif

namespace trotterbench {

namespace {

const std::vector<std::pair<Method, const char*>> kMethodNames = {
    {Method::Lr, "lr"},         {Method::Fro, "fro"},          {Method::Gfro, "gfro"}, {Method::SdGfro, "sd-gfro"},
    {Method::LrLcu, "lr-lcu"}, {Method::GfroLcu, "gfro-lcu"}, {Method::FcLf, "fc-lf"}, {Method::FcSi, "fc-si"}};

struct SectorSpec {
  enum class Kind { Auto, Full, Fermionic } kind = Kind::Auto;
  FermionicLabels labels;
};

SectorSpec parse_sector(const std::string& text) {
  if (text == "auto-neutral-ground") return {};
  if (text == "full") return {SectorSpec::Kind::Full, {}};
  static const std::regex pattern(R"(eta=(\d+),m=(-?\d+(?:\.5|\.0)?)(?:,s=(\d+(?:\.5|\.0)?))?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw ConfigError("sector must be auto-neutral-ground, full, or eta=<n>,m=<sz>[,s=<spin>]: " + text);
  SectorSpec s{SectorSpec::Kind::Fermionic, {}};
  s.labels.electrons = std::stoi(m[1].str());
  s.labels.sz = std::stod(m[2].str());
  if (m[3].matched) s.labels.spin = std::stod(m[3].str());
  return s;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + p.string());
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::string molecule_name(const std::filesystem::path& input) { return input.stem().string(); }

PauliSum total_hamiltonian(const Partition& p, int n_qubits) {
  PauliSum h(n_qubits);
  for (const auto& f : p.fragments) h += f;
  return h;
}

struct ResolvedSector {
  std::optional<SymmetrySector> sector;
  std::optional<SymmetrySector> fallback;
  std::vector<std::string> diagnostics;
};

ResolvedSector resolve_sector(const MolecularTensors& t, const RunConfig& config, const Partition& part) {
  const SectorSpec spec = parse_sector(config.sector);
  ResolvedSector out;
  if (spec.kind == SectorSpec::Kind::Full) return out;
  const int n = t.n_spin();
  if (spec.kind == SectorSpec::Kind::Fermionic || is_fermionic(config.method)) {
    FermionicLabels labels = spec.labels;
    if (spec.kind == SectorSpec::Kind::Auto) {
      if (!t.n_electrons) throw ConfigError("auto-neutral-ground needs the electron count (NELEC) of the input");
      labels = {*t.n_electrons, 0.0, 0.0};
    }
    out.sector = fermionic_sector(n, config.mapping, labels);
    if (labels.spin) out.fallback = fermionic_sector(n, config.mapping, {labels.electrons, labels.sz, std::nullopt});
    return out;
  }
  const auto symmetries = commuting_subset(find_pauli_symmetries(part.fragments));
  if (symmetries.empty()) return out;
  const SparseOp h = to_sparse(total_hamiltonian(part, n), config.caps.max_qubits);
  const auto ground = ground_state(h);
  const auto zeta = measure_labels(symmetries, ground.vector);
  std::vector<PauliTerm> kept;
  std::vector<int> kept_zeta;
  for (std::size_t i = 0; i < symmetries.size(); ++i) {
    if (zeta[i] == 0) {
      out.diagnostics.push_back("symmetry " + to_string(symmetries[i].string, n) +
                                " has no definite value in the computed ground state; dropped");
      continue;
    }
    kept.push_back(symmetries[i]);
    kept_zeta.push_back(zeta[i]);
  }
  if (!kept.empty()) out.sector = qubit_sector(kept, kept_zeta, n);
  return out;
}

std::string provenance(const RunConfig& config, double wall_seconds) {
  nlohmann::json j;
  const std::string cfg = config.to_json();
  j["config"] = nlohmann::json::parse(cfg);
  j["config_hash"] = fnv1a_hex(cfg);
  j["version"] = TROTTERBENCH_VERSION;
  j["eigen_version"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                       std::to_string(EIGEN_MINOR_VERSION);
#if defined(__clang__)
  j["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  j["compiler"] = std::string("gcc ") + __VERSION__;
#endif
  j["wall_seconds"] = wall_seconds;
  return j.dump(1);
}

}  // namespace

std::string to_string(Method m) {
  for (const auto& [k, name] : kMethodNames)
    if (k == m) return name;
  throw InternalError("unnamed method");
}

Method method_from_string(const std::string& name) {
  for (const auto& [k, n] : kMethodNames)
    if (name == n) return k;
  throw ConfigError("unknown method '" + name + "'");
}

bool is_fermionic(Method m) { return m != Method::FcLf && m != Method::FcSi; }

std::vector<Method> all_methods() {
  std::vector<Method> out;
  for (const auto& [k, n] : kMethodNames) out.push_back(k);
  return out;
}

void RunConfig::validate() const {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(threshold >= 0.0)) throw ConfigError("threshold must be non-negative");
  if (caps.max_fragments < 1) throw ConfigError("max_fragments must be at least 1");
  if (caps.max_qubits < 1) throw ConfigError("max_qubits must be at least 1");
  parse_sector(sector);
}

std::string RunConfig::to_json() const {
  nlohmann::json j;
  j["input"] = input.generic_string();
  j["method"] = to_string(method);
  j["mapping"] = to_string(mapping);
  j["threshold"] = threshold;
  j["seed"] = seed;
  j["sector"] = sector;
  j["epsilon"] = epsilon;
  j["caps"] = {{"max_qubits", caps.max_qubits}, {"max_fragments", caps.max_fragments},
               {"time_budget", caps.time_budget}};
  return j.dump(1);
}

RunConfig RunConfig::from_json(const std::string& text) {
  RunConfig c;
  try {
    const auto j = nlohmann::json::parse(text);
    c.input = j.at("input").get<std::string>();
    c.method = method_from_string(j.value("method", to_string(c.method)));
    try {
      c.mapping = mapping_from_string(j.value("mapping", to_string(c.mapping)));
    } catch (const ValidationError& e) {
      throw ConfigError(e.what());
    }
    c.threshold = j.value("threshold", c.threshold);
    c.seed = j.value("seed", c.seed);
    c.sector = j.value("sector", c.sector);
    c.epsilon = j.value("epsilon", c.epsilon);
    if (j.contains("caps")) {
      const auto& k = j.at("caps");
      c.caps.max_qubits = k.value("max_qubits", c.caps.max_qubits);
      c.caps.max_fragments = k.value("max_fragments", c.caps.max_fragments);
      c.caps.time_budget = k.value("time_budget", c.caps.time_budget);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config JSON: ") + e.what());
  }
  c.validate();
  return c;
}

std::string Partition::to_json() const {
  if (fermionic) return partition_to_json(*fermionic);
  if (qubit) return partition_to_json(*qubit);
  throw InternalError("empty partition");
}

MolecularTensors load_input(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("input file not found: " + path.string());
  const auto ext = path.extension().string();
  if (ext == ".json") return load_json(path);
  return load_fcidump(path);
}

Partition make_partition(const MolecularTensors& t, const RunConfig& config) {
  Partition p;
  p.method = config.method;
  FitOptions fit;
  fit.seed = config.seed;
  const int cap = config.caps.max_fragments;
  switch (config.method) {
    case Method::Lr: p.fermionic = lr_decompose(t, config.threshold); break;
    case Method::Fro: p.fermionic = fro_decompose(t, cap, config.threshold, fit); break;
    case Method::Gfro: p.fermionic = gfro_decompose(t, config.threshold, cap, fit); break;
    case Method::SdGfro: p.fermionic = sd_gfro_decompose(t, config.threshold, cap, fit); break;
    case Method::LrLcu: p.fermionic = lcu_postprocess(lr_decompose(t, config.threshold)); break;
    case Method::GfroLcu: p.fermionic = lcu_postprocess(gfro_decompose(t, config.threshold, cap, fit)); break;
    case Method::FcLf: p.qubit = group_lf(map_to_qubits(t, config.mapping)); break;
    case Method::FcSi: p.qubit = group_si(map_to_qubits(t, config.mapping)); break;
  }
  if (p.fermionic) {
    p.fermionic->method = to_string(config.method);
    for (const auto& f : p.fermionic->fragments) p.fragments.push_back(map_to_qubits(f, config.mapping));
    p.n_r = fermionic_rotation_count(*p.fermionic).total;
  } else {
    p.fragments = p.qubit->fragments();
    p.n_r = qubit_rotation_count(*p.qubit).total;
  }
  return p;
}

RunResult run(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const MolecularTensors t = load_input(config.input);
  const Partition part = make_partition(t, config);

  MetricInput in;
  in.method = to_string(config.method);
  in.molecule = molecule_name(config.input);
  in.mapping = config.mapping;
  in.fragments = part.fragments;
  in.n_r = part.n_r;
  in.epsilon = config.epsilon;
  in.residual_l1 = part.fermionic ? part.fermionic->residual_l1 : 0.0;
  in.pauli_pruning = !is_fermionic(config.method);
  in.options.time_budget = config.caps.time_budget;
  in.max_qubits = config.caps.max_qubits;

  RunResult out;
  out.partition_json = part.to_json();
  try {
    ResolvedSector sector = resolve_sector(t, config, part);
    in.sector = std::move(sector.sector);
    in.fallback_sector = std::move(sector.fallback);
    out.report = build_report(in);
    out.report.diagnostics.insert(out.report.diagnostics.begin(), sector.diagnostics.begin(),
                                  sector.diagnostics.end());
  } catch (const ResourceError& e) {
    TrotterReport& r = out.report;
    r.method = in.method;
    r.molecule = in.molecule;
    r.mapping = to_string(in.mapping);
    r.sector = config.sector;
    r.gamma = static_cast<int>(in.fragments.size());
    r.n_r = in.n_r;
    r.epsilon = in.epsilon;
    r.residual_l1 = in.residual_l1;
    r.complete = false;
    r.diagnostics.push_back(std::string("metrics skipped: ") + e.what());
  }
  if (part.fermionic)
    for (const auto& d : part.fermionic->diagnostics) out.report.diagnostics.push_back("partition: " + d);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.provenance_json = provenance(config, wall);
  return out;
}

std::vector<std::filesystem::path> write_artifacts(const RunResult& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string stem = r.report.molecule + "_" + r.report.method;
  const std::vector<std::pair<std::string, std::string>> files = {
      {stem + ".partition.json", r.partition_json},
      {stem + ".report.json", report_to_json(r.report)},
      {stem + ".report.csv", report_csv_header() + "\n" + report_csv_row(r.report)},
      {stem + ".provenance.json", r.provenance_json}};
  std::vector<std::filesystem::path> out;
  for (const auto& [name, text] : files) {
    out.push_back(dir / name);
    write_file(out.back(), text);
  }
  return out;
}

std::string compare(const std::vector<TrotterReport>& reports) {
  if (reports.size() < 2) throw ConfigError("compare needs at least two reports");
  std::vector<const TrotterReport*> rows;
  for (const auto& r : reports) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const TrotterReport* a, const TrotterReport* b) {
    if (a->molecule != b->molecule) return a->molecule < b->molecule;
    if (a->figure_of_merit != b->figure_of_merit) return a->figure_of_merit < b->figure_of_merit;
    return a->method < b->method;
  });
  const double eps = reports.front().epsilon;
  std::string out = report_csv_header() + ",flag\n";
  for (const auto* r : rows) out += report_csv_row(*r) + "," + (r->epsilon != eps ? "mixed-epsilon" : "") + "\n";
  return out;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace trotterbench
