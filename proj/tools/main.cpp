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

#ifdef TROTTERBENCH_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trotterbench/errors.hpp"
#include "trotterbench/metrics.hpp"
#include "trotterbench/pipeline.hpp"

namespace tb = trotterbench;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string config_file;
  std::string input;
  std::string method;
  std::string mapping;
  double threshold = 0.0;
  std::uint64_t seed = 0;
  std::string sector;
  double epsilon = 0.0;
  int max_qubits = 0;
  int max_fragments = 0;
  double time_budget = 0.0;
  std::string out_dir = ".";
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tb::ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_run_flags(CLI::App* cmd, Flags& f, bool with_metrics) {
  cmd->add_option("--config", f.config_file, "JSON run configuration; flags override its fields");
  cmd->add_option("-i,--input", f.input, "FCIDUMP or tensor JSON file");
  cmd->add_option("-m,--method", f.method, "lr, fro, gfro, sd-gfro, lr-lcu, gfro-lcu, fc-lf or fc-si");
  cmd->add_option("--mapping", f.mapping, "jw or bk (default bk)");
  cmd->add_option("--threshold", f.threshold, "residual L1 stopping threshold (Hartree)");
  cmd->add_option("--seed", f.seed, "seed for the fitted methods");
  cmd->add_option("--max-fragments", f.max_fragments, "fragment cap (fragment count for fro)");
  cmd->add_option("-o,--out", f.out_dir, "output directory")->capture_default_str();
  if (!with_metrics) return;
  cmd->add_option("--sector", f.sector, "auto-neutral-ground, full, or eta=<n>,m=<sz>[,s=<spin>]");
  cmd->add_option("--epsilon", f.epsilon, "target energy error (Hartree)");
  cmd->add_option("--max-qubits", f.max_qubits, "qubit cap for matrix construction");
  cmd->add_option("--time-budget", f.time_budget, "seconds for commutator evaluation (0 = unlimited)");
}

tb::RunConfig resolve_config(const CLI::App* cmd, const Flags& f) {
  tb::RunConfig c;
  if (!f.config_file.empty()) c = tb::RunConfig::from_json(read_text(f.config_file));
  const auto given = [cmd](const char* name) { return cmd->count(name) > 0; };
  if (given("--input")) c.input = f.input;
  if (given("--method")) c.method = tb::method_from_string(f.method);
  if (given("--mapping")) {
    try {
      c.mapping = tb::mapping_from_string(f.mapping);
    } catch (const tb::ValidationError& e) {
      throw tb::ConfigError(e.what());
    }
  }
  if (given("--threshold")) c.threshold = f.threshold;
  if (given("--seed")) c.seed = f.seed;
  if (given("--max-fragments")) c.caps.max_fragments = f.max_fragments;
  if (cmd->get_option_no_throw("--sector") != nullptr) {
    if (given("--sector")) c.sector = f.sector;
    if (given("--epsilon")) c.epsilon = f.epsilon;
    if (given("--max-qubits")) c.caps.max_qubits = f.max_qubits;
    if (given("--time-budget")) c.caps.time_budget = f.time_budget;
  }
  if (c.input.empty()) throw tb::ConfigError("an input file is required (--input or config)");
  if (f.config_file.empty() && !given("--method")) throw tb::ConfigError("--method is required");
  c.validate();
  return c;
}

int cmd_partition(const CLI::App* cmd, const Flags& f) {
  const tb::RunConfig c = resolve_config(cmd, f);
  const tb::Partition p = tb::make_partition(tb::load_input(c.input), c);
  std::filesystem::create_directories(f.out_dir);
  const auto path = std::filesystem::path(f.out_dir) /
                    (c.input.stem().string() + "_" + tb::to_string(c.method) + ".partition.json");
  std::ofstream(path, std::ios::binary) << p.to_json() << '\n';
  std::cout << path.string() << "\nfragments " << p.fragments.size() << "  rotations " << p.n_r << '\n';
  return 0;
}

int cmd_metrics(const CLI::App* cmd, const Flags& f) {
  const tb::RunConfig c = resolve_config(cmd, f);
  const tb::RunResult r = tb::run(c);
  for (const auto& path : tb::write_artifacts(r, f.out_dir)) std::cout << path.string() << '\n';
  const auto& rep = r.report;
  std::printf("%s %s: gamma %d  alpha_q %.10g  n_r %lld  alpha_q*n_r %.10g  n_t %.6g%s\n", rep.molecule.c_str(),
              rep.method.c_str(), rep.gamma, rep.alpha_q, rep.n_r, rep.figure_of_merit, rep.tgate.n_t,
              rep.complete ? "" : "  (incomplete)");
  for (const auto& d : rep.diagnostics) std::cerr << "note: " << d << '\n';
  return 0;
}

int cmd_tgate(double alpha, double n_r, double epsilon) {
  if (!(alpha > 0.0) || !(n_r >= 1.0) || !(epsilon > 0.0))
    throw tb::ConfigError("tgate needs --alpha > 0, --n-r >= 1 and --epsilon > 0");
  const tb::TGateEstimate t = tb::tgate_count(alpha, n_r, epsilon);
  const nlohmann::json j = {{"alpha", alpha}, {"n_r", n_r},         {"epsilon", epsilon}, {"n_t", t.n_t},
                            {"eps_t", t.eps_t}, {"eps_pe", t.eps_pe}, {"eps_ht", t.eps_ht}};
  std::cout << j.dump(1) << '\n';
  return 0;
}

int cmd_compare(const std::vector<std::string>& files, const std::string& out) {
  std::vector<tb::TrotterReport> reports;
  for (const auto& file : files) reports.push_back(tb::report_from_json(read_text(file)));
  const std::string table = tb::compare(reports);
  if (out.empty()) {
    std::cout << table;
  } else {
    std::ofstream(out, std::ios::binary) << table;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian fragmentation and Trotter error metrics"};
  app.require_subcommand(1);
  Flags flags;

  auto* partition = app.add_subcommand("partition", "partition a Hamiltonian and write the fragments");
  add_run_flags(partition, flags, false);

  auto* metrics = app.add_subcommand("metrics", "partition, evaluate Trotter metrics and write all artifacts");
  add_run_flags(metrics, flags, true);

  double alpha = 0.0;
  double n_r = 0.0;
  double epsilon = 1e-3;
  auto* tgate = app.add_subcommand("tgate", "T-gate estimate for a given alpha and rotation count");
  tgate->add_option("--alpha", alpha, "Trotter error coefficient (Hartree^2)")->required();
  tgate->add_option("--n-r", n_r, "rotations per Trotter step")->required();
  tgate->add_option("--epsilon", epsilon, "target energy error (Hartree)")->capture_default_str();

  std::vector<std::string> report_files;
  std::string compare_out;
  auto* compare = app.add_subcommand("compare", "merge report JSON files into one CSV table");
  compare->add_option("reports", report_files, "report JSON files")->required();
  compare->add_option("-o,--out", compare_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*partition) return cmd_partition(partition, flags);
    if (*metrics) return cmd_metrics(metrics, flags);
    if (*tgate) return cmd_tgate(alpha, n_r, epsilon);
    if (*compare) return cmd_compare(report_files, compare_out);
  } catch (const tb::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
