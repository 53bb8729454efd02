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

#include "trotterbench/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstring>
#include <limits>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trotterbench/errors.hpp"

namespace trotterbench {

double Tensor4::l1_norm() const {
  double s = 0.0;
  for (double v : data_) s += std::abs(v);
  return s;
}

double Tensor4::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

Tensor4& Tensor4::operator+=(const Tensor4& other) {
  if (other.n_ != n_) throw DimensionError("tensor dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor4& Tensor4::operator-=(const Tensor4& other) {
  if (other.n_ != n_) throw DimensionError("tensor dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor4& Tensor4::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }

MolecularTensors MolecularTensors::zeros(int n_spatial) {
  MolecularTensors t;
  t.n_spatial = n_spatial;
  t.h = Matrix::Zero(2 * n_spatial, 2 * n_spatial);
  t.g = Tensor4(2 * n_spatial);
  return t;
}

bool bit_equal(const MolecularTensors& a, const MolecularTensors& b) {
  if (a.n_spatial != b.n_spatial || a.n_electrons != b.n_electrons) return false;
  if (std::memcmp(&a.constant, &b.constant, sizeof(double)) != 0) return false;
  if (a.h.rows() != b.h.rows() || a.h.cols() != b.h.cols()) return false;
  if (std::memcmp(a.h.data(), b.h.data(), sizeof(double) * a.h.size()) != 0) return false;
  if (a.g.size() != b.g.size()) return false;
  return std::memcmp(a.g.data().data(), b.g.data().data(), sizeof(double) * a.g.size()) == 0;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::NonFinite: return "non-finite";
    case Violation::Kind::OneBodySymmetry: return "one-body-symmetry";
    case Violation::Kind::PairSymmetry: return "pair-symmetry";
    case Violation::Kind::SupermatrixSymmetry: return "supermatrix-symmetry";
    case Violation::Kind::Shape: return "shape";
  }
  return "unknown";
}

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

using Index4 = std::array<int, 4>;

Index4 swap_pair(const Index4& i) { return {i[1], i[0], i[3], i[2]}; }
Index4 swap_super(const Index4& i) { return {i[2], i[3], i[0], i[1]}; }

std::string describe(const Index4& i) {
  std::ostringstream os;
  os << "g[" << i[0] << "][" << i[1] << "][" << i[2] << "][" << i[3] << "]";
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const MolecularTensors& t, double tol) {
  std::vector<Violation> out;
  const int n = t.n_spin();
  if (t.n_spatial < 0 || t.h.rows() != n || t.h.cols() != n || t.g.dim() != n) {
    out.push_back({Violation::Kind::Shape, {}, 0.0, "tensor shapes do not match n_spin = " + std::to_string(n)});
    return out;
  }
  if (!std::isfinite(t.constant)) {
    out.push_back({Violation::Kind::NonFinite, {}, t.constant, "constant is not finite"});
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (!std::isfinite(t.h(p, q))) {
        out.push_back({Violation::Kind::NonFinite, {p, q}, t.h(p, q), "h entry is not finite"});
      } else if (p < q && !close(t.h(p, q), t.h(q, p), tol)) {
        out.push_back({Violation::Kind::OneBodySymmetry, {p, q}, std::abs(t.h(p, q) - t.h(q, p)),
                       "h[p][q] != h[q][p]"});
      }
    }
  }
  // Each orbit {i, pair(i), super(i), pair(super(i))} is checked once, from
  // its lexicographically smallest member.
  auto value = [&](const Index4& i) { return t.g(i[0], i[1], i[2], i[3]); };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const Index4 i{p, q, r, s};
          const double v = value(i);
          if (!std::isfinite(v)) {
            out.push_back({Violation::Kind::NonFinite, {p, q, r, s}, v, describe(i) + " is not finite"});
            continue;
          }
          const Index4 a = swap_pair(i), b = swap_super(i), c = swap_pair(b);
          if (a < i || b < i || c < i) continue;
          const double va = value(a), vb = value(b), vc = value(c);
          if (!std::isfinite(va) || !std::isfinite(vb) || !std::isfinite(vc)) continue;
          if (!close(v, va, tol) || !close(vb, vc, tol)) {
            const double mag = std::max(std::abs(v - va), std::abs(vb - vc));
            out.push_back({Violation::Kind::PairSymmetry, {p, q, r, s}, mag,
                           describe(i) + " != " + describe(a)});
          }
          if (!close(v, vb, tol) || !close(va, vc, tol)) {
            const double mag = std::max(std::abs(v - vb), std::abs(va - vc));
            out.push_back({Violation::Kind::SupermatrixSymmetry, {p, q, r, s}, mag,
                           describe(i) + " != " + describe(b)});
          }
        }
  return out;
}

void require_valid(const MolecularTensors& t, double tol) {
  const auto v = validate(t, tol);
  if (v.empty()) return;
  std::ostringstream os;
  os << v.size() << " tensor invariant violation(s):";
  for (std::size_t i = 0; i < std::min<std::size_t>(v.size(), 5); ++i) {
    os << " [" << to_string(v[i].kind) << "] " << v[i].message << ";";
  }
  throw ValidationError(os.str());
}

MolecularTensors expand_to_spin_orbitals(const Matrix& h_spatial, const Tensor4& g_spatial,
                                         double constant, double tol) {
  const int m = static_cast<int>(h_spatial.rows());
  if (h_spatial.cols() != m || g_spatial.dim() != m) {
    throw ValidationError("spatial tensor shapes disagree");
  }
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (!close(h_spatial(p, q), h_spatial(q, p), tol))
        throw ValidationError("spatial one-body matrix is not symmetric");
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          const double v = g_spatial(p, q, r, s);
          if (!close(v, g_spatial(q, p, r, s), tol) || !close(v, g_spatial(p, q, s, r), tol) ||
              !close(v, g_spatial(r, s, p, q), tol))
            throw ValidationError("spatial two-body tensor lacks 8-fold symmetry at " +
                                  describe({p, q, r, s}));
        }

  MolecularTensors t = MolecularTensors::zeros(m);
  t.constant = constant;
  const int n = 2 * m;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p % 2 == q % 2) t.h(p, q) = h_spatial(p / 2, q / 2);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p % 2 != q % 2) continue;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (r % 2 != s % 2) continue;
          t.g(p, q, r, s) = 0.5 * g_spatial(p / 2, q / 2, r / 2, s / 2);
        }
    }
  for (int p = 0; p < n; ++p)
    for (int s = 0; s < n; ++s) {
      double corr = 0.0;
      for (int q = 0; q < n; ++q) corr += t.g(p, q, q, s);
      t.h(p, s) -= corr;
    }
  return t;
}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

// Pulls an integer value for KEY= out of the namelist text.
std::optional<int> namelist_int(const std::string& header, const std::string& key) {
  const std::string u = upper(header);
  std::size_t pos = 0;
  while ((pos = u.find(key, pos)) != std::string::npos) {
    const bool boundary = pos == 0 || !std::isalnum(static_cast<unsigned char>(u[pos - 1]));
    std::size_t k = pos + key.size();
    while (k < u.size() && std::isspace(static_cast<unsigned char>(u[k]))) ++k;
    if (boundary && k < u.size() && u[k] == '=') {
      ++k;
      while (k < u.size() && std::isspace(static_cast<unsigned char>(u[k]))) ++k;
      std::size_t end = k;
      if (end < u.size() && (u[end] == '-' || u[end] == '+')) ++end;
      while (end < u.size() && std::isdigit(static_cast<unsigned char>(u[end]))) ++end;
      if (end == k) return std::nullopt;
      return std::stoi(u.substr(k, end - k));
    }
    pos += key.size();
  }
  return std::nullopt;
}

void fill_8fold(Tensor4& g, int i, int j, int k, int l, double v) {
  const std::array<std::array<int, 4>, 8> perms = {{{i, j, k, l},
                                                    {j, i, k, l},
                                                    {i, j, l, k},
                                                    {j, i, l, k},
                                                    {k, l, i, j},
                                                    {l, k, i, j},
                                                    {k, l, j, i},
                                                    {l, k, j, i}}};
  for (const auto& p : perms) g(p[0], p[1], p[2], p[3]) = v;
}

}  // namespace

MolecularTensors parse_fcidump(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string header;
  std::size_t line_no = 0;
  bool in_header = false, header_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string u = upper(line);
    if (!in_header) {
      if (u.find("&FCI") == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw ParseError("expected &FCI namelist header", line_no);
      }
      in_header = true;
    }
    header += line + "\n";
    const auto trimmed = u.substr(0, u.find_last_not_of(" \t\r") + 1);
    if (u.find("&END") != std::string::npos || (!trimmed.empty() && trimmed.back() == '/')) {
      header_done = true;
      break;
    }
  }
  if (!header_done) throw ParseError("unterminated &FCI namelist", line_no);
  const auto norb = namelist_int(header, "NORB");
  const auto nelec = namelist_int(header, "NELEC");
  const auto ms2 = namelist_int(header, "MS2");
  if (!norb || !nelec || !ms2) throw ParseError("header must declare NORB, NELEC and MS2", line_no);
  if (*norb < 0) throw ParseError("NORB must be non-negative", line_no);

  const int m = *norb;
  Matrix h = Matrix::Zero(m, m);
  Tensor4 g(m);
  double constant = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    // Fortran exponents (1.0D-03) are accepted.
    std::string fixed = line;
    std::replace(fixed.begin(), fixed.end(), 'D', 'E');
    std::replace(fixed.begin(), fixed.end(), 'd', 'e');
    std::istringstream ls(fixed);
    double value = 0.0;
    long idx[4];
    if (!(ls >> value >> idx[0] >> idx[1] >> idx[2] >> idx[3])) {
      throw ParseError("expected 'value i j k l'", line_no);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens after integral entry", line_no);
    for (long x : idx) {
      if (x < 0 || x > m) {
        throw BoundsError("orbital index " + std::to_string(x) + " outside NORB=" + std::to_string(m) +
                          " (line " + std::to_string(line_no) + ")");
      }
    }
    const int i = static_cast<int>(idx[0]) - 1, j = static_cast<int>(idx[1]) - 1;
    const int k = static_cast<int>(idx[2]) - 1, l = static_cast<int>(idx[3]) - 1;
    if (i < 0 && j < 0 && k < 0 && l < 0) {
      constant = value;
    } else if (i >= 0 && j >= 0 && k < 0 && l < 0) {
      h(i, j) = value;
      h(j, i) = value;
    } else if (i >= 0 && j >= 0 && k >= 0 && l >= 0) {
      fill_8fold(g, i, j, k, l, value);
    } else {
      throw ParseError("unsupported index pattern", line_no);
    }
  }
  MolecularTensors t = expand_to_spin_orbitals(h, g, constant);
  t.n_electrons = *nelec;
  return t;
}

MolecularTensors load_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fcidump(ss.str());
}

std::string to_json_string(const MolecularTensors& t) {
  nlohmann::json j;
  j["version"] = kTensorSchemaVersion;
  j["n_spatial"] = t.n_spatial;
  j["constant"] = t.constant;
  std::vector<double> h(static_cast<std::size_t>(t.h.size()));
  for (int p = 0; p < t.h.rows(); ++p)
    for (int q = 0; q < t.h.cols(); ++q) h[static_cast<std::size_t>(p) * t.h.cols() + q] = t.h(p, q);
  j["h"] = h;
  j["g"] = t.g.data();
  if (t.n_electrons) j["n_electrons"] = *t.n_electrons;
  return j.dump();
}

namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* key, std::size_t expected) {
  if (!j.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != expected) {
    throw SchemaError(std::string("'") + key + "' must be an array of " + std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& v : a) {
    if (v.is_null()) {
      out.push_back(std::numeric_limits<double>::quiet_NaN());  // NaN is serialized as null
    } else if (v.is_number()) {
      out.push_back(v.get<double>());
    } else {
      throw SchemaError(std::string("'") + key + "' contains a non-numeric entry");
    }
  }
  return out;
}

}  // namespace

MolecularTensors from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version")) throw SchemaError("missing schema 'version'");
  const int version = j.at("version").get<int>();
  if (version != kTensorSchemaVersion) {
    throw SchemaError("unsupported tensor schema version " + std::to_string(version) + " (expected " +
                      std::to_string(kTensorSchemaVersion) + ")");
  }
  if (!j.contains("n_spatial") || !j.contains("constant")) throw SchemaError("missing 'n_spatial' or 'constant'");
  const int m = j.at("n_spatial").get<int>();
  if (m < 0) throw SchemaError("'n_spatial' must be non-negative");
  const std::size_t n = 2 * static_cast<std::size_t>(m);
  MolecularTensors t = MolecularTensors::zeros(m);
  t.constant = j.at("constant").is_null() ? std::numeric_limits<double>::quiet_NaN() : j.at("constant").get<double>();
  const auto h = number_array(j, "h", n * n);
  const auto g = number_array(j, "g", n * n * n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) t.h(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) = h[p * n + q];
  t.g.data() = g;
  if (j.contains("n_electrons")) t.n_electrons = j.at("n_electrons").get<int>();
  require_valid(t);
  return t;
}

MolecularTensors load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_string(ss.str());
}

void save_json(const MolecularTensors& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json_string(t) << "\n";
}

Tensor4 transform(const Tensor4& x, const Matrix& u) {
  const int n = x.dim();
  if (u.rows() != n || u.cols() != n) throw DimensionError("rotation size does not match tensor");
  // Four successive one-index contractions, O(n^5).
  Tensor4 a(n), b(n);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p) {
      const double w = u(p, i);
      if (w == 0.0) continue;
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) a(i, q, r, s) += w * x(p, q, r, s);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int q = 0; q < n; ++q) {
        const double w = u(q, j);
        if (w == 0.0) continue;
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) b(i, j, r, s) += w * a(i, q, r, s);
      }
  std::fill(a.data().begin(), a.data().end(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) {
          const double w = u(r, k);
          if (w == 0.0) continue;
          for (int s = 0; s < n; ++s) a(i, j, k, s) += w * b(i, j, r, s);
        }
  std::fill(b.data().begin(), b.data().end(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int s = 0; s < n; ++s) acc += u(s, l) * a(i, j, k, s);
          b(i, j, k, l) = acc;
        }
  return b;
}

}  // namespace trotterbench
