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

#include <bit>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trotterbench {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 64;

/// Symplectic Pauli product. Qubit k carries X if bit k of x is set and Z if
/// bit k of z is set; both set means Y itself (no hidden phase), i.e. the
/// operator is prod_k i^{x_k z_k} X^{x_k} Z^{z_k}.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool is_identity() const { return (x | z) == 0; }
  int weight() const { return std::popcount(x | z); }
  /// 0 = I, 1 = X, 2 = Y, 3 = Z
  int at(int qubit) const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

PauliString pauli_x(int qubit);
PauliString pauli_y(int qubit);
PauliString pauli_z(int qubit);

inline bool commutes(PauliString a, PauliString b) {
  return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) % 2 == 0;
}

/// a * b = i^phase * result
struct PauliProduct {
  PauliString result;
  int phase = 0;  // 0..3
};

PauliProduct multiply(PauliString a, PauliString b);

/// Qubit 0 is the leftmost character; characters from {I, X, Y, Z}.
std::string to_string(PauliString p, int n_qubits);
PauliString parse_pauli(const std::string& text);

/// Orders by the text form with I < X < Y < Z on qubit 0 first.
bool lexicographic_less(PauliString a, PauliString b);

struct PauliTerm {
  int n_qubits = 0;
  PauliString string;
  Complex coeff{1.0, 0.0};
};

/// Throw DimensionError on qubit-count mismatch.
bool pauli_commutes(const PauliTerm& a, const PauliTerm& b);
PauliTerm pauli_multiply(const PauliTerm& a, const PauliTerm& b);

/// Sum of Pauli products with complex coefficients, keyed by string.
class PauliSum {
 public:
  static constexpr double kDefaultPrune = 1e-14;

  PauliSum() = default;
  explicit PauliSum(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::map<PauliString, Complex>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(PauliString p, Complex c);
  void add(const PauliTerm& t);
  Complex coefficient(PauliString p) const;
  Complex identity_coefficient() const { return coefficient({}); }

  /// Removes entries with |c| <= tol.
  PauliSum& prune(double tol = kDefaultPrune);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex s);

  /// Terms as a list sorted by descending |coeff|, ties lexicographic.
  std::vector<PauliTerm> sorted_terms() const;

  /// Sum of |c| over non-identity terms.
  double l1_norm() const;
  std::size_t non_identity_count() const;
  /// max |Im c| over all terms
  double max_imaginary() const;

  PauliSum without_identity() const;

 private:
  int n_qubits_ = 0;
  std::map<PauliString, Complex> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

/// Lines "coeff PAULI" (or "re im PAULI" when the coefficient is complex).
std::string to_text(const PauliSum& s);
PauliSum pauli_sum_from_text(const std::string& text);

/// {"n_qubits": n, "terms": [{"string": "XIZ", "re": .., "im": ..}, ...]}
std::string to_json(const PauliSum& s);
PauliSum pauli_sum_from_json(const std::string& text);

}  // namespace trotterbench
