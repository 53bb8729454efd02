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

#include "trotterbench/qubit_map.hpp"

#include <gtest/gtest.h>

#include "fock_oracle.hpp"
#include "pauli_oracle.hpp"
#include "trotterbench/errors.hpp"

namespace tb = trotterbench;

namespace {

tb::MolecularTensors h2() { return tb::load_fcidump(oracle::fixture("H2.fcidump")); }

oracle::CMatrix ladder(tb::Mapping m, int j, bool dagger, int n) {
  return oracle::dense(tb::ladder_image(m, j, dagger, n));
}

}  // namespace

TEST(JordanWigner, NumberOperatorImage) {
  const auto s = tb::jordan_wigner(tb::number_operator(1, 0));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.coefficient(tb::parse_pauli("I")), tb::Complex(0.5));
  EXPECT_EQ(s.coefficient(tb::parse_pauli("Z")), tb::Complex(-0.5));
}

TEST(JordanWigner, HoppingImage) {
  tb::FermionOperator op;
  op.n_modes = 2;
  op.terms = {{{{0, true}, {1, false}}, 1.0}, {{{1, true}, {0, false}}, 1.0}};
  const auto s = tb::jordan_wigner(op);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_NEAR(std::abs(s.coefficient(tb::parse_pauli("XX")) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.coefficient(tb::parse_pauli("YY")) - 0.5), 0.0, 1e-15);
}

TEST(BravyiKitaev, NumberOperatorOnModeZero) {
  const auto s = tb::bravyi_kitaev(tb::number_operator(4, 0));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.coefficient(tb::parse_pauli("IIII")), tb::Complex(0.5));
  EXPECT_EQ(s.coefficient(tb::parse_pauli("ZIII")), tb::Complex(-0.5));
}

TEST(BravyiKitaev, FenwickSets) {
  // 8 modes: qubit 7 stores the parity of everything, qubit 3 of modes 0..3.
  EXPECT_EQ(tb::bk_update_set(0, 8), 0b10001010U);
  EXPECT_EQ(tb::bk_update_set(4, 8), 0b10100000U);
  EXPECT_EQ(tb::bk_parity_set(6), 0b00101000U);
  EXPECT_EQ(tb::bk_occupation_set(7), 0b11101000U);
  EXPECT_EQ(tb::bk_occupation_set(3), 0b00001110U);
  EXPECT_EQ(tb::bk_remainder_set(3), 0U);
  EXPECT_EQ(tb::bk_remainder_set(6), 0b00101000U);
  EXPECT_EQ(tb::bk_encode(0b1, 8), 0b10001011U);
  for (std::uint64_t occ = 0; occ < 256; ++occ) {
    const auto b = tb::bk_encode(occ, 8);
    for (int j = 0; j < 8; ++j) {
      EXPECT_EQ(std::popcount(b & tb::bk_occupation_set(j)) % 2, static_cast<int>((occ >> j) & 1U));
      EXPECT_EQ(std::popcount(b & tb::bk_parity_set(j)) % 2, std::popcount(occ & ((1U << j) - 1)) % 2);
    }
  }
}

class CanonicalAnticommutation : public ::testing::TestWithParam<std::tuple<tb::Mapping, int>> {};

TEST_P(CanonicalAnticommutation, Holds) {
  const auto [m, n] = GetParam();
  const auto dim = Eigen::Index{1} << n;
  const oracle::CMatrix id = oracle::CMatrix::Identity(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto ai = ladder(m, i, false, n), aj = ladder(m, j, false, n), cj = ladder(m, j, true, n);
      EXPECT_LT((ai * cj + cj * ai - (i == j ? id : oracle::CMatrix::Zero(dim, dim))).cwiseAbs().maxCoeff(), 1e-14);
      EXPECT_LT((ai * aj + aj * ai).cwiseAbs().maxCoeff(), 1e-14);
      EXPECT_LT((cj - aj.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    }
}

INSTANTIATE_TEST_SUITE_P(Mappings, CanonicalAnticommutation,
                         ::testing::Combine(::testing::Values(tb::Mapping::JordanWigner, tb::Mapping::BravyiKitaev),
                                            ::testing::Range(1, 7)));

TEST(BravyiKitaev, IsBasisPermutationOfJordanWigner) {
  const int n = 5;
  tb::FermionOperator op;
  op.n_modes = n;
  op.terms = {{{{0, true}, {3, false}}, 0.7}, {{{3, true}, {0, false}}, 0.7}, {{{4, true}, {4, false}, {1, true}, {2, false}}, -0.3},
              {{{2, true}, {1, false}, {4, true}, {4, false}}, -0.3}};
  const auto jw = oracle::dense(tb::jordan_wigner(op));
  const auto bk = oracle::dense(tb::bravyi_kitaev(op));
  for (std::uint64_t a = 0; a < (1U << n); ++a)
    for (std::uint64_t b = 0; b < (1U << n); ++b)
      EXPECT_LT(std::abs(bk(static_cast<Eigen::Index>(tb::bk_encode(a, n)), static_cast<Eigen::Index>(tb::bk_encode(b, n))) -
                         jw(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))),
                1e-14);
}

TEST(Mapping, H2SpectraAgreeWithFermionicOracle) {
  const auto t = h2();
  const auto fermionic = oracle::hamiltonian(t, oracle::make_basis(4));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fermionic, Eigen::EigenvaluesOnly);
  const auto jw = tb::map_to_qubits(t, tb::Mapping::JordanWigner);
  const auto bk = tb::map_to_qubits(t, tb::Mapping::BravyiKitaev);
  EXPECT_LT(jw.max_imaginary(), 1e-12);
  EXPECT_LT(bk.max_imaginary(), 1e-12);
  EXPECT_LT((oracle::hermitian_spectrum(oracle::dense(jw)) - es.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((oracle::hermitian_spectrum(oracle::dense(bk)) - oracle::hermitian_spectrum(oracle::dense(jw))).cwiseAbs().maxCoeff(), 1e-10);
  // JW matrix equals the Fock-space matrix entrywise
  EXPECT_LT((oracle::dense(jw).real() - fermionic).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(bk.identity_coefficient().real(), fermionic.trace() / 16.0, 1e-12);
  EXPECT_EQ(jw.size(), 15u);
}

TEST(Mapping, IsLinearTermwise) {
  const auto t = h2();
  auto a = tb::to_fermion_operator(t);
  tb::FermionOperator b = tb::number_operator(4, 2);
  b *= 0.3;
  for (auto m : {tb::Mapping::JordanWigner, tb::Mapping::BravyiKitaev}) {
    auto lhs = tb::map_to_qubits(a + b, m);
    auto rhs = tb::map_to_qubits(a, m) + tb::map_to_qubits(b, m);
    lhs -= rhs;
    lhs.prune(1e-13);
    EXPECT_TRUE(lhs.empty());
  }
}

TEST(Mapping, OutOfRangeModeRejected) {
  tb::FermionOperator op;
  op.n_modes = 2;
  op.terms = {{{{2, true}, {0, false}}, 1.0}};
  EXPECT_THROW(tb::jordan_wigner(op), tb::BoundsError);
  EXPECT_THROW(tb::mapping_from_string("parity"), tb::ValidationError);
}
