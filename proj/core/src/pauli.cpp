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

#include "trotterbench/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trotterbench/errors.hpp"

namespace trotterbench {

namespace {

void check_qubit(int q) {
  if (q < 0 || q >= kMaxQubits) throw BoundsError("qubit index " + std::to_string(q) + " out of range");
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int PauliString::at(int qubit) const {
  const bool bx = (x >> qubit) & 1U, bz = (z >> qubit) & 1U;
  if (bx && bz) return 2;
  if (bx) return 1;
  if (bz) return 3;
  return 0;
}

PauliString pauli_x(int qubit) {
  check_qubit(qubit);
  return {std::uint64_t{1} << qubit, 0};
}

PauliString pauli_y(int qubit) {
  check_qubit(qubit);
  return {std::uint64_t{1} << qubit, std::uint64_t{1} << qubit};
}

PauliString pauli_z(int qubit) {
  check_qubit(qubit);
  return {0, std::uint64_t{1} << qubit};
}

PauliProduct multiply(PauliString a, PauliString b) {
  // i^{x1 z1} X^x1 Z^z1 i^{x2 z2} X^x2 Z^z2 = i^{x1 z1 + x2 z2} (-1)^{z1 x2} X^x3 Z^z3
  // and X^x3 Z^z3 = i^{-x3 z3} P(x3, z3).
  PauliProduct out;
  out.result = {a.x ^ b.x, a.z ^ b.z};
  const int e = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) + 2 * std::popcount(a.z & b.x) -
                std::popcount(out.result.x & out.result.z);
  out.phase = ((e % 4) + 4) % 4;
  return out;
}

std::string to_string(PauliString p, int n_qubits) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) s[static_cast<std::size_t>(q)] = kChars[p.at(q)];
  return s;
}

PauliString parse_pauli(const std::string& text) {
  if (text.size() > static_cast<std::size_t>(kMaxQubits)) throw BoundsError("Pauli string longer than 64 qubits");
  PauliString p;
  for (std::size_t q = 0; q < text.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I': break;
      case 'X': p.x |= bit; break;
      case 'Y': p.x |= bit; p.z |= bit; break;
      case 'Z': p.z |= bit; break;
      default: throw ParseError(std::string("invalid Pauli character '") + text[q] + "'", 0);
    }
  }
  return p;
}

bool lexicographic_less(PauliString a, PauliString b) {
  const std::uint64_t diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  const int q = std::countr_zero(diff);
  return a.at(q) < b.at(q);
}

bool pauli_commutes(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits != b.n_qubits) throw DimensionError("Pauli terms act on different qubit counts");
  return commutes(a.string, b.string);
}

PauliTerm pauli_multiply(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits != b.n_qubits) throw DimensionError("Pauli terms act on different qubit counts");
  const auto prod = multiply(a.string, b.string);
  return {a.n_qubits, prod.result, a.coeff * b.coeff * i_power(prod.phase)};
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) throw BoundsError("qubit count out of range");
}

void PauliSum::add(PauliString p, Complex c) {
  if (n_qubits_ < kMaxQubits && ((p.x | p.z) >> n_qubits_) != 0) {
    throw BoundsError("Pauli string acts outside the sum's " + std::to_string(n_qubits_) + " qubits");
  }
  terms_[p] += c;
}

void PauliSum::add(const PauliTerm& t) {
  if (t.n_qubits != n_qubits_) throw DimensionError("term and sum act on different qubit counts");
  add(t.string, t.coeff);
}

Complex PauliSum::coefficient(PauliString p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Complex{} : it->second;
}

PauliSum& PauliSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
  return *this;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) throw DimensionError("sums act on different qubit counts");
  for (const auto& [p, c] : other.terms_) terms_[p] += c;
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) throw DimensionError("sums act on different qubit counts");
  for (const auto& [p, c] : other.terms_) terms_[p] -= c;
  return *this;
}

PauliSum& PauliSum::operator*=(Complex s) {
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

std::vector<PauliTerm> PauliSum::sorted_terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) out.push_back({n_qubits_, p, c});
  std::stable_sort(out.begin(), out.end(), [](const PauliTerm& a, const PauliTerm& b) {
    const double ma = std::abs(a.coeff), mb = std::abs(b.coeff);
    if (ma != mb) return ma > mb;
    return lexicographic_less(a.string, b.string);
  });
  return out;
}

double PauliSum::l1_norm() const {
  double s = 0.0;
  for (const auto& [p, c] : terms_)
    if (!p.is_identity()) s += std::abs(c);
  return s;
}

std::size_t PauliSum::non_identity_count() const {
  return terms_.size() - (terms_.count(PauliString{}) ? 1 : 0);
}

double PauliSum::max_imaginary() const {
  double m = 0.0;
  for (const auto& kv : terms_) m = std::max(m, std::abs(kv.second.imag()));
  return m;
}

PauliSum PauliSum::without_identity() const {
  PauliSum out = *this;
  out.terms_.erase(PauliString{});
  return out;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("sums act on different qubit counts");
  PauliSum out(a.n_qubits());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      const auto prod = multiply(pa, pb);
      out.add(prod.result, ca * cb * i_power(prod.phase));
    }
  return out;
}

std::string to_text(const PauliSum& s) {
  std::ostringstream out;
  out << "# n_qubits " << s.n_qubits() << "\n";
  for (const auto& [p, c] : s.terms()) {
    out << format_double(c.real());
    if (c.imag() != 0.0) out << ' ' << format_double(c.imag());
    out << ' ' << to_string(p, s.n_qubits()) << "\n";
  }
  return out.str();
}

PauliSum pauli_sum_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n_qubits = -1;
  std::vector<std::pair<PauliString, Complex>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "#") {
      if (tok.size() == 3 && tok[1] == "n_qubits") n_qubits = std::stoi(tok[2]);
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) throw ParseError("expected 'coeff PAULI' or 're im PAULI'", line_no);
    try {
      const double re = std::stod(tok[0]);
      const double im = tok.size() == 3 ? std::stod(tok[1]) : 0.0;
      const std::string& ps = tok.back();
      if (n_qubits < 0) n_qubits = static_cast<int>(ps.size());
      if (static_cast<int>(ps.size()) != n_qubits) throw ParseError("Pauli string length mismatch", line_no);
      entries.emplace_back(parse_pauli(ps), Complex{re, im});
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid coefficient", line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  PauliSum out(std::max(n_qubits, 0));
  for (const auto& [p, c] : entries) out.add(p, c);
  return out;
}

std::string to_json(const PauliSum& s) {
  nlohmann::json j;
  j["n_qubits"] = s.n_qubits();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [p, c] : s.terms()) arr.push_back({{"string", to_string(p, s.n_qubits())}, {"re", c.real()}, {"im", c.imag()}});
  j["terms"] = std::move(arr);
  return j.dump();
}

PauliSum pauli_sum_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    PauliSum out(j.at("n_qubits").get<int>());
    for (const auto& t : j.at("terms")) {
      const auto s = t.at("string").get<std::string>();
      if (static_cast<int>(s.size()) != out.n_qubits()) throw SchemaError("Pauli string length mismatch");
      out.add(parse_pauli(s), {t.at("re").get<double>(), t.value("im", 0.0)});
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("Pauli sum JSON: ") + e.what());
  }
}

}  // namespace trotterbench
