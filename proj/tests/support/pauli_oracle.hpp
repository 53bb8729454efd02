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

// Dense Pauli matrices from explicit Kronecker products; basis index bit q is
// qubit q, so the factor for the highest qubit is the leftmost one.

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace oracle {

using CMatrix = Eigen::MatrixXcd;

inline CMatrix single(char c) {
  using C = std::complex<double>;
  CMatrix m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// `text` lists qubit 0 first, e.g. "XIZ" = X on qubit 0, Z on qubit 2.
inline CMatrix pauli_matrix(const std::string& text) {
  CMatrix m = CMatrix::Identity(1, 1);
  for (auto it = text.rbegin(); it != text.rend(); ++it) m = kron(m, single(*it));
  return m;
}

template <class Sum>
CMatrix dense(const Sum& s) {
  const Eigen::Index dim = Eigen::Index{1} << s.n_qubits();
  CMatrix m = CMatrix::Zero(dim, dim);
  for (const auto& [p, c] : s.terms()) m += c * pauli_matrix(to_string(p, s.n_qubits()));
  return m;
}

inline Eigen::VectorXd hermitian_spectrum(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace oracle
