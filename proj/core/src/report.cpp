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

#include "trotterbench/report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trotterbench/errors.hpp"

namespace trotterbench {

namespace {

constexpr const char* kTgateNote =
    "N_T depends on the computed alpha_Q and N_R, which vary with mapping conventions and grouping "
    "heuristics; agreement within a factor of 3 of reference counts is the expected precision.";

struct SectorChoice {
  std::vector<SparseOp> projected;
  std::string label;
};

SectorChoice project_all(const std::vector<SparseOp>& ops, const SymmetrySector& sector,
                                        double& worst_leak) {
  SectorChoice c;
  c.label = describe(sector.labels);
  worst_leak = 0.0;
  for (const auto& op : ops) {
    double leak = 0.0;
    c.projected.push_back(project(op, sector, &leak));
    const double scale = std::max(1.0, op.matrix.norm());
    worst_leak = std::max(worst_leak, leak / scale);
  }
  return c;
}

std::string format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

TrotterReport build_report(const MetricInput& in) {
  if (in.fragments.empty()) throw ValidationError("a report needs at least one fragment");
  TrotterReport r;
  r.method = in.method;
  r.molecule = in.molecule;
  r.mapping = to_string(in.mapping);
  r.gamma = static_cast<int>(in.fragments.size());
  r.n_r = in.n_r;
  r.epsilon = in.epsilon;
  r.residual_l1 = in.residual_l1;

  std::vector<SparseOp> ops;
  for (const auto& f : in.fragments) ops.push_back(to_sparse(f, in.max_qubits));

  FragmentSet full = in.pauli_pruning ? FragmentSet(ops, in.fragments, in.options) : FragmentSet(ops, in.options);
  std::vector<double> ranges;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Extremes e = full.extremes(i);
    FragmentSpectrum s{e.min, e.max, l1_bound(in.fragments[i])};
    if (s.range() / 2.0 > s.l1_norm + 1e-8)
      r.diagnostics.push_back("fragment " + std::to_string(i) + ": half range exceeds the Pauli L1 norm");
    r.fragments.push_back(s);
    ranges.push_back(s.range());
  }
  const auto d = spectral_descriptors(ranges);
  r.beta = d.beta;
  r.c = d.c;
  r.s_l = d.s_l;
  r.second_order = second_order_estimate(d.c, d.s_l);
  r.alpha = full.alpha();
  r.alpha_ordered = full.alpha_ordered();
  r.complete = full.complete();

  std::vector<SparseOp> projected = ops;
  r.sector = "full";
  if (in.sector) {
    double leak = 0.0;
    auto choice = project_all(ops, *in.sector, leak);
    if (leak > kLeakageTolerance && in.fallback_sector) {
      r.diagnostics.push_back("fragments leave sector " + choice.label + " (relative leakage " + format(leak) +
                              "); using " + describe(in.fallback_sector->labels));
      choice = project_all(ops, *in.fallback_sector, leak);
    }
    if (leak > kLeakageTolerance)
      r.diagnostics.push_back("fragments leave sector " + choice.label + " (relative leakage " + format(leak) + ")");
    projected = std::move(choice.projected);
    r.sector = choice.label;
  }
  FragmentSet sector_set(projected, in.options);
  for (std::size_t i = 0; i < projected.size(); ++i) r.ranges_q.push_back(sector_set.extremes(i).range());
  const auto dq = spectral_descriptors(r.ranges_q);
  r.beta_q = dq.beta;
  r.c_q = dq.c;
  r.s_l_q = dq.s_l;
  r.alpha_q = sector_set.alpha();
  r.complete = r.complete && sector_set.complete();
  if (!r.complete) r.diagnostics.push_back("time budget exhausted; commutator sums are partial");

  r.figure_of_merit = r.alpha_q * static_cast<double>(r.n_r);
  if (r.alpha_q > 0.0 && r.n_r >= 1) {
    r.tgate = tgate_count(r.alpha_q, static_cast<double>(r.n_r), r.epsilon);
  } else {
    r.diagnostics.push_back("T-gate model skipped: it needs alpha_Q > 0 and N_R >= 1");
  }
  return r;
}

std::string report_to_json(const TrotterReport& r) {
  using nlohmann::json;
  json j;
  j["method"] = r.method;
  j["molecule"] = r.molecule;
  j["mapping"] = r.mapping;
  j["sector"] = r.sector;
  j["gamma"] = r.gamma;
  j["alpha"] = r.alpha;
  j["alpha_ordered"] = r.alpha_ordered;
  j["alpha_q"] = r.alpha_q;
  j["beta"] = r.beta;
  j["beta_q"] = r.beta_q;
  j["c"] = r.c;
  j["c_q"] = r.c_q;
  j["s_l"] = r.s_l;
  j["s_l_q"] = r.s_l_q;
  j["second_order"] = r.second_order;
  j["n_r"] = r.n_r;
  j["figure_of_merit"] = r.figure_of_merit;
  j["epsilon"] = r.epsilon;
  j["n_t"] = r.tgate.n_t;
  j["tgate_split"] = {{"eps_t", r.tgate.eps_t}, {"eps_pe", r.tgate.eps_pe}, {"eps_ht", r.tgate.eps_ht}};
  j["residual_l1"] = r.residual_l1;
  json frags = json::array();
  for (const auto& f : r.fragments)
    frags.push_back({{"e_min", f.e_min}, {"e_max", f.e_max}, {"range", f.range()}, {"l1_norm", f.l1_norm}});
  j["fragments"] = std::move(frags);
  j["ranges_q"] = r.ranges_q;
  j["complete"] = r.complete;
  j["diagnostics"] = r.diagnostics;
  j["notes"] = {kTgateNote};
  return j.dump(1);
}

TrotterReport report_from_json(const std::string& text) {
  using nlohmann::json;
  TrotterReport r;
  try {
    const json j = json::parse(text);
    r.method = j.at("method").get<std::string>();
    r.molecule = j.at("molecule").get<std::string>();
    r.mapping = j.at("mapping").get<std::string>();
    r.sector = j.at("sector").get<std::string>();
    r.gamma = j.at("gamma").get<int>();
    r.alpha = j.at("alpha").get<double>();
    r.alpha_ordered = j.at("alpha_ordered").get<double>();
    r.alpha_q = j.at("alpha_q").get<double>();
    r.beta = j.at("beta").get<double>();
    r.beta_q = j.at("beta_q").get<double>();
    r.c = j.at("c").get<double>();
    r.c_q = j.at("c_q").get<double>();
    r.s_l = j.at("s_l").get<double>();
    r.s_l_q = j.at("s_l_q").get<double>();
    r.second_order = j.at("second_order").get<double>();
    r.n_r = j.at("n_r").get<long long>();
    r.figure_of_merit = j.at("figure_of_merit").get<double>();
    r.epsilon = j.at("epsilon").get<double>();
    r.tgate.n_t = j.at("n_t").get<double>();
    const auto& split = j.at("tgate_split");
    r.tgate.eps_t = split.at("eps_t").get<double>();
    r.tgate.eps_pe = split.at("eps_pe").get<double>();
    r.tgate.eps_ht = split.at("eps_ht").get<double>();
    r.residual_l1 = j.value("residual_l1", 0.0);
    for (const auto& f : j.at("fragments"))
      r.fragments.push_back({f.at("e_min").get<double>(), f.at("e_max").get<double>(), f.at("l1_norm").get<double>()});
    r.ranges_q = j.at("ranges_q").get<std::vector<double>>();
    r.complete = j.at("complete").get<bool>();
    r.diagnostics = j.value("diagnostics", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw SchemaError(std::string("report JSON: ") + e.what());
  }
  return r;
}

std::vector<std::string> report_csv_columns() {
  return {"molecule", "method",  "mapping", "sector",       "gamma",        "alpha",           "alpha_ordered",
          "alpha_q",  "beta",    "beta_q",  "c",            "c_q",          "s_l",             "s_l_q",
          "second_order", "n_r", "figure_of_merit", "epsilon", "n_t",     "eps_t",           "eps_pe",
          "eps_ht",   "complete"};
}

std::string report_csv_header() {
  std::string out;
  for (const auto& c : report_csv_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string report_csv_row(const TrotterReport& r) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\" ") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  std::ostringstream os;
  os << quote(r.molecule) << ',' << quote(r.method) << ',' << r.mapping << ',' << quote(r.sector) << ',' << r.gamma
     << ',' << num(r.alpha) << ',' << num(r.alpha_ordered) << ',' << num(r.alpha_q) << ',' << num(r.beta) << ','
     << num(r.beta_q) << ',' << num(r.c) << ',' << num(r.c_q) << ',' << num(r.s_l) << ',' << num(r.s_l_q) << ','
     << num(r.second_order) << ',' << r.n_r << ',' << num(r.figure_of_merit) << ',' << num(r.epsilon) << ','
     << num(r.tgate.n_t) << ',' << num(r.tgate.eps_t) << ',' << num(r.tgate.eps_pe) << ',' << num(r.tgate.eps_ht)
     << ',' << (r.complete ? "true" : "false");
  return os.str();
}

}  // namespace trotterbench
