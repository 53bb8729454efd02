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

#include <random>

#include <gtest/gtest.h>

#include "fock_oracle.hpp"
#include "pauli_oracle.hpp"
#include "trotterbench/block_op.hpp"
#include "trotterbench/errors.hpp"
#include "trotterbench/sparse_op.hpp"
#include "trotterbench/symmetry.hpp"

namespace tb = trotterbench;

namespace {

tb::PauliSum sum_of(int n, const std::vector<std::pair<std::string, double>>& terms) {
  tb::PauliSum s(n);
  for (const auto& [p, c] : terms) s.add(tb::parse_pauli(p), c);
  return s;
}

tb::MolecularTensors h2() { return tb::load_fcidump(oracle::fixture("H2.fcidump")); }

tb::CMatrix random_hermitian(std::mt19937& rng, Eigen::Index d, double density) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  tb::CMatrix m = tb::CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i; j < d; ++j)
      if (i == j || (u(rng) + 1.0) / 2.0 < density) {
        m(i, j) = {u(rng), i == j ? 0.0 : u(rng)};
        m(j, i) = std::conj(m(i, j));
      }
  return m;
}

tb::SparseOp sparse_of(const tb::CMatrix& m) { return tb::from_matrix(m.sparseView(0.0, 0.0)); }

double dense_norm(const tb::CMatrix& m) { return Eigen::JacobiSVD<tb::CMatrix>(m).singularValues()(0); }

// GF(2) membership of target in the span of the given strings.
bool in_span(const std::vector<tb::PauliTerm>& gens, tb::PauliString target) {
  std::vector<std::uint64_t> basis;
  auto reduce = [&](std::uint64_t v) {
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    return v;
  };
  for (const auto& g : gens) {
    const std::uint64_t v = reduce(g.string.x | (g.string.z << 32));
    if (v) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return reduce(target.x | (target.z << 32)) == 0;
}

}  // namespace

TEST(ToSparse, SingleZ) {
  const auto op = tb::to_sparse(sum_of(1, {{"Z", 1.0}}));
  EXPECT_EQ(tb::CMatrix(op.matrix), oracle::pauli_matrix("Z"));
}

TEST(ToSparse, HoppingMatrix) {
  const auto op = tb::to_sparse(sum_of(2, {{"XX", 0.5}, {"YY", 0.5}}));
  tb::CMatrix expected = tb::CMatrix::Zero(4, 4);
  expected(1, 2) = expected(2, 1) = 1.0;
  EXPECT_LT((tb::CMatrix(op.matrix) - expected).norm(), 1e-15);
  EXPECT_EQ(op.matrix.nonZeros(), 2);
}

TEST(ToSparse, MatchesKroneckerOracle) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(0, 3);
  tb::PauliSum s(4);
  for (int k = 0; k < 20; ++k) {
    std::string t;
    for (int q = 0; q < 4; ++q) t += "IXYZ"[letter(rng)];
    s.add(tb::parse_pauli(t), tb::Complex(0.1 * k - 1.0, 0.05 * k));
  }
  EXPECT_LT((tb::CMatrix(tb::to_sparse(s).matrix) - oracle::dense(s)).norm(), 1e-13);
}

TEST(ToSparse, H2SpectrumMatchesFockOracle) {
  const auto t = h2();
  const auto op = tb::to_sparse(tb::map_to_qubits(t, tb::Mapping::JordanWigner));
  const auto spec = oracle::hermitian_spectrum(tb::CMatrix(op.matrix));
  const Eigen::MatrixXd fock = oracle::hamiltonian(t, oracle::make_basis(4));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fock, Eigen::EigenvaluesOnly);
  EXPECT_LT((spec - es.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(spec(0), oracle::meta_value("H2", "e_fci"), 1e-8);
}

TEST(ToSparse, CapRaisesResourceError) {
  EXPECT_THROW(tb::to_sparse(sum_of(17, {{std::string(17, 'Z'), 1.0}})), tb::ResourceError);
  EXPECT_THROW(tb::to_sparse(sum_of(5, {{"ZZZZZ", 1.0}}), 4), tb::ResourceError);
}

TEST(Extremes, NumberOperatorEnergies) {
  // 1*n0 - 2*n1 = 0.5*(I - Z0) - (I - Z1)
  const auto op = tb::to_sparse(sum_of(2, {{"II", -0.5}, {"ZI", -0.5}, {"IZ", 1.0}}));
  const auto e = tb::extreme_eigenvalues(op);
  EXPECT_NEAR(e.min, -2.0, 1e-12);
  EXPECT_NEAR(e.max, 1.0, 1e-12);
}

TEST(Extremes, SinglePauliTerm) {
  const auto e = tb::extreme_eigenvalues(tb::to_sparse(sum_of(3, {{"XYZ", -0.7}})));
  EXPECT_NEAR(e.min, -0.7, 1e-12);
  EXPECT_NEAR(e.max, 0.7, 1e-12);
}

TEST(Extremes, LanczosMatchesDenseOracle) {
  std::mt19937 rng(5);
  tb::EigenOptions lanczos;
  lanczos.dense_limit = 0;
  lanczos.krylov_dim = 20;  // forces restarts
  for (int trial = 0; trial < 5; ++trial) {
    const tb::CMatrix m = random_hermitian(rng, 64, 0.1);
    const auto spec = oracle::hermitian_spectrum(m);
    const auto e = tb::extreme_eigenvalues(sparse_of(m), lanczos);
    EXPECT_NEAR(e.min, spec(0), 1e-8 * spec.cwiseAbs().maxCoeff());
    EXPECT_NEAR(e.max, spec(63), 1e-8 * spec.cwiseAbs().maxCoeff());
  }
}

TEST(Extremes, LanczosReportsNonConvergence) {
  std::mt19937 rng(6);
  tb::EigenOptions o;
  o.dense_limit = 0;
  o.krylov_dim = 3;
  o.max_restarts = 1;
  o.tolerance = 1e-15;
  try {
    tb::extreme_eigenvalues(sparse_of(random_hermitian(rng, 200, 0.2)), o);
    FAIL() << "expected ConvergenceError";
  } catch (const tb::ConvergenceError& e) {
    EXPECT_GT(e.residual(), 0.0);
  }
}

TEST(SpectralNorm, CommutatorOfXAndZ) {
  const auto x = tb::to_sparse(sum_of(1, {{"X", 1.0}})), z = tb::to_sparse(sum_of(1, {{"Z", 1.0}}));
  EXPECT_NEAR(tb::spectral_norm(tb::commutator(x, z)), 2.0, 1e-12);
  EXPECT_NEAR(tb::commutator_norm(x, z), 2.0, 1e-12);
}

TEST(SpectralNorm, ScaledIdentity) {
  EXPECT_NEAR(tb::spectral_norm(tb::to_sparse(sum_of(2, {{"II", -3.5}}))), 3.5, 1e-12);
}

TEST(SpectralNorm, RandomPairsMatchSvdOracle) {
  std::mt19937 rng(8);
  tb::EigenOptions lanczos;
  lanczos.dense_limit = 0;
  for (int trial = 0; trial < 4; ++trial) {
    const tb::CMatrix a = random_hermitian(rng, 64, 0.15), b = random_hermitian(rng, 64, 0.15);
    const double oracle_norm = dense_norm(a * b - b * a);
    EXPECT_NEAR(tb::commutator_norm(sparse_of(a), sparse_of(b)), oracle_norm, 1e-8 * oracle_norm);
    EXPECT_NEAR(tb::commutator_norm(sparse_of(a), sparse_of(b), lanczos), oracle_norm, 1e-8 * oracle_norm);
    EXPECT_NEAR(tb::spectral_norm(sparse_of(a * b)), dense_norm(a * b), 1e-8 * dense_norm(a * b));
  }
}

TEST(Blocks, NumberConservingOperatorSplitsByParticleNumber) {
  const auto op = tb::to_sparse(tb::map_to_qubits(h2(), tb::Mapping::JordanWigner));
  const auto s = tb::common_blocks(std::vector<tb::SparseOp>{op});
  // (N_up, N_down) sectors of 2 + 2 modes; the H2 Hamiltonian may split them further
  EXPECT_GE(s.blocks.size(), 9u);
  std::size_t total = 0;
  for (const auto& b : s.blocks) {
    total += b.size();
    for (auto i : b) EXPECT_EQ(std::popcount(static_cast<unsigned>(i)), std::popcount(static_cast<unsigned>(b[0])));
  }
  EXPECT_EQ(total, 16u);
}

TEST(Blocks, BlockedCommutatorMatchesDense) {
  std::mt19937 rng(9);
  // block-diagonal operators with blocks of 3, 40 and 150 states, permuted
  const Eigen::Index d = 193;
  std::vector<Eigen::Index> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto make = [&] {
    tb::CMatrix m = tb::CMatrix::Zero(d, d);
    m.block(0, 0, 3, 3) = random_hermitian(rng, 3, 1.0);
    m.block(3, 3, 40, 40) = random_hermitian(rng, 40, 0.3).real().cast<tb::Complex>();
    m.block(43, 43, 150, 150) = random_hermitian(rng, 150, 0.05).real().cast<tb::Complex>();
    tb::CMatrix p(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) p(perm[i], perm[j]) = m(i, j);
    return p;
  };
  const tb::CMatrix a = make(), b = make();
  const auto sa = sparse_of(a), sb = sparse_of(b);
  const auto s = tb::common_blocks(std::vector<tb::SparseOp>{sa, sb});
  ASSERT_EQ(s.blocks.size(), 3u);
  const auto ba = tb::to_blocks(sa, s), bb = tb::to_blocks(sb, s);
  EXPECT_FALSE(ba.real);
  const auto ea = tb::block_extremes(ba), eb = tb::block_extremes(bb);
  const double expected = dense_norm(a * b - b * a);
  EXPECT_NEAR(tb::commutator_norm(ba, bb), expected, 1e-8 * expected);
  EXPECT_NEAR(tb::commutator_norm(ba, bb, {}, &ea, &eb), expected, 1e-8 * expected);
  const auto spec = oracle::hermitian_spectrum(a);
  EXPECT_NEAR(tb::combine(ea).min, spec(0), 1e-10);
  EXPECT_NEAR(tb::combine(ea).max, spec(d - 1), 1e-10);
}

TEST(Blocks, RealBlocksUseLanczosAboveLimit) {
  std::mt19937 rng(10);
  const tb::CMatrix a = random_hermitian(rng, 300, 0.05).real().cast<tb::Complex>();
  const tb::CMatrix b = random_hermitian(rng, 300, 0.05).real().cast<tb::Complex>();
  const auto sa = sparse_of(a), sb = sparse_of(b);
  const auto s = tb::common_blocks(std::vector<tb::SparseOp>{sa, sb});
  const auto ba = tb::to_blocks(sa, s), bb = tb::to_blocks(sb, s);
  EXPECT_TRUE(ba.real);
  const double expected = dense_norm(a * b - b * a);
  EXPECT_NEAR(tb::commutator_norm(ba, bb), expected, 1e-8 * expected);
}

TEST(Blocks, CrossBlockCouplingIsRejected) {
  const auto a = tb::to_sparse(sum_of(2, {{"ZI", 1.0}})), b = tb::to_sparse(sum_of(2, {{"XI", 1.0}}));
  const auto s = tb::common_blocks(std::vector<tb::SparseOp>{a});
  EXPECT_THROW(tb::to_blocks(b, s), tb::DimensionError);
}

TEST(GroundState, H2MatchesFullCi) {
  const auto op = tb::to_sparse(tb::map_to_qubits(h2(), tb::Mapping::BravyiKitaev));
  const auto g = tb::ground_state(op);
  EXPECT_NEAR(g.energy, oracle::meta_value("H2", "e_fci"), 1e-8);
  EXPECT_NEAR(g.vector.norm(), 1.0, 1e-12);
  EXPECT_LT((op.matrix * g.vector - g.energy * g.vector).norm(), 1e-8);
}

TEST(SpinOperators, Spectra) {
  const auto two = tb::build_spin_operators(2);
  auto sorted = [](Eigen::VectorXd v) {
    std::sort(v.data(), v.data() + v.size());
    return v;
  };
  EXPECT_LT((sorted(tb::CMatrix(two.number.matrix).diagonal().real()) - Eigen::Vector4d(0, 1, 1, 2)).norm(), 1e-14);
  EXPECT_LT((tb::CMatrix(two.sz.matrix).diagonal().real() - Eigen::Vector4d(0, 0.5, -0.5, 0)).norm(), 1e-14);

  const auto four = tb::build_spin_operators(4);
  EXPECT_LT(tb::commutator_norm(four.s2, four.sz), 1e-12);
  EXPECT_LT(tb::commutator_norm(four.number, four.s2), 1e-12);
  const auto basis = oracle::make_basis(4, 2, 0);
  Eigen::MatrixXd block(basis.states.size(), basis.states.size());
  const tb::CMatrix s2(four.s2.matrix);
  for (std::size_t i = 0; i < basis.states.size(); ++i)
    for (std::size_t j = 0; j < basis.states.size(); ++j) block(i, j) = s2(basis.states[i], basis.states[j]).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
  EXPECT_LT((es.eigenvalues() - Eigen::Vector4d(0, 0, 0, 2)).norm(), 1e-12);
}

TEST(PauliSymmetries, ZZFragment) {
  const auto syms = tb::find_pauli_symmetries({sum_of(2, {{"ZZ", 1.0}})});
  EXPECT_EQ(syms.size(), 3u);
  EXPECT_TRUE(in_span(syms, tb::parse_pauli("ZI")));
  EXPECT_TRUE(in_span(syms, tb::parse_pauli("IZ")));
  EXPECT_EQ(tb::to_string(syms[0].string, 2), "IZ");
  EXPECT_EQ(tb::to_string(syms[1].string, 2), "ZI");
  EXPECT_EQ(tb::to_string(syms[2].string, 2), "XX");
}

TEST(PauliSymmetries, XFragment) {
  const auto syms = tb::find_pauli_symmetries({sum_of(1, {{"X", 1.0}})});
  ASSERT_EQ(syms.size(), 1u);
  EXPECT_EQ(tb::to_string(syms[0].string, 1), "X");
  EXPECT_FALSE(in_span(syms, tb::parse_pauli("Z")));
}

TEST(PauliSymmetries, H2ParityStrings) {
  std::vector<tb::PauliSum> frags;
  const auto h = tb::map_to_qubits(h2(), tb::Mapping::JordanWigner);
  for (const auto& t : h.sorted_terms()) {
    tb::PauliSum f(4);
    f.add(t);
    frags.push_back(f);
  }
  const auto syms = tb::find_pauli_symmetries(frags);
  EXPECT_TRUE(in_span(syms, tb::parse_pauli("ZZZZ")));
  EXPECT_TRUE(in_span(syms, tb::parse_pauli("ZIZI")));
  for (const auto& q : syms) {
    const tb::CMatrix mq = oracle::pauli_matrix(tb::to_string(q.string, 4));
    for (const auto& f : frags) {
      const tb::CMatrix mf = oracle::dense(f);
      EXPECT_LT((mq * mf - mf * mq).norm(), 1e-12);
    }
  }
}

TEST(Sectors, FermionicDimensions) {
  EXPECT_EQ(tb::fermionic_sector(4, tb::Mapping::JordanWigner, {2, 0.0, std::nullopt}).dim() +
                tb::fermionic_sector(4, tb::Mapping::JordanWigner, {2, 1.0, std::nullopt}).dim() +
                tb::fermionic_sector(4, tb::Mapping::JordanWigner, {2, -1.0, std::nullopt}).dim(),
            6);
  for (auto m : {tb::Mapping::JordanWigner, tb::Mapping::BravyiKitaev}) {
    const auto sec = tb::fermionic_sector(4, m, {2, 0.0, 0.0});
    EXPECT_EQ(sec.dim(), 3);
    const tb::CMatrix b(sec.basis);
    EXPECT_LT((b.adjoint() * b - tb::CMatrix::Identity(3, 3)).norm(), 1e-10);
    const auto ops = tb::build_spin_operators(4, m);
    EXPECT_LT((tb::CMatrix(ops.s2.matrix) * b).norm(), 1e-8);
    EXPECT_LT((tb::CMatrix(ops.number.matrix) * b - 2.0 * b).norm(), 1e-8);
    EXPECT_LT((tb::CMatrix(ops.sz.matrix) * b).norm(), 1e-8);
  }
  EXPECT_THROW(tb::fermionic_sector(4, tb::Mapping::JordanWigner, {2, 0.0, 2.0}), tb::EmptySectorError);
  EXPECT_THROW(tb::fermionic_sector(4, tb::Mapping::JordanWigner, {5, 0.0, std::nullopt}), tb::EmptySectorError);
}

TEST(Sectors, FermionicCompleteness) {
  for (auto m : {tb::Mapping::JordanWigner, tb::Mapping::BravyiKitaev}) {
    Eigen::Index total = 0;
    for (int eta = 0; eta <= 4; ++eta)
      for (int two_m = -eta; two_m <= eta; two_m += 2)
        for (double s : {0.0, 0.5, 1.0, 1.5, 2.0}) {
          if (s < std::abs(two_m) / 2.0) continue;
          try {
            total += tb::fermionic_sector(4, m, {eta, two_m / 2.0, s}).dim();
          } catch (const tb::EmptySectorError&) {
          }
        }
    EXPECT_EQ(total, 16);
  }
}

TEST(Sectors, QubitParitySector) {
  const std::vector<tb::PauliTerm> zz{{2, tb::parse_pauli("ZZ"), 1.0}};
  const auto sec = tb::qubit_sector(zz, {1}, 2);
  ASSERT_EQ(sec.dim(), 2);
  const tb::CMatrix b(sec.basis);
  EXPECT_EQ(std::abs(b(0, 0)), 1.0);
  EXPECT_EQ(std::abs(b(3, 1)), 1.0);
}

TEST(Sectors, QubitCompletenessAndEigenvectors) {
  const std::vector<tb::PauliTerm> syms{{3, tb::parse_pauli("XXI"), 1.0}, {3, tb::parse_pauli("ZZZ"), 1.0}};
  ASSERT_TRUE(tb::commutes(syms[0].string, syms[1].string));
  Eigen::Index total = 0;
  for (int z0 : {1, -1})
    for (int z1 : {1, -1}) {
      const auto sec = tb::qubit_sector(syms, {z0, z1}, 3);
      total += sec.dim();
      const tb::CMatrix b(sec.basis);
      EXPECT_LT((b.adjoint() * b - tb::CMatrix::Identity(sec.dim(), sec.dim())).norm(), 1e-10);
      EXPECT_LT((oracle::pauli_matrix("XXI") * b - z0 * b).norm(), 1e-8);
      EXPECT_LT((oracle::pauli_matrix("ZZZ") * b - z1 * b).norm(), 1e-8);
    }
  EXPECT_EQ(total, 8);
}

TEST(Sectors, InconsistentLabelsAreEmpty) {
  const std::vector<tb::PauliTerm> syms{
      {2, tb::parse_pauli("ZI"), 1.0}, {2, tb::parse_pauli("IZ"), 1.0}, {2, tb::parse_pauli("ZZ"), 1.0}};
  EXPECT_THROW(tb::qubit_sector(syms, {1, 1, -1}, 2), tb::EmptySectorError);
  EXPECT_THROW(tb::qubit_sector({{1, tb::parse_pauli("X"), 1.0}, {1, tb::parse_pauli("Z"), 1.0}}, {1, 1}, 1),
               tb::ValidationError);
}

TEST(Project, IdentityBecomesSectorIdentity) {
  const auto sec = tb::fermionic_sector(4, tb::Mapping::JordanWigner, {2, 0.0, 0.0});
  const auto id = tb::to_sparse(sum_of(4, {{"IIII", 1.0}}));
  EXPECT_LT((tb::CMatrix(tb::project(id, sec).matrix) - tb::CMatrix::Identity(3, 3)).norm(), 1e-12);
}

TEST(Project, NormContractsForNumberPolynomial) {
  const auto ops = tb::build_spin_operators(4);
  const auto n = tb::CMatrix(ops.number.matrix);
  const tb::CMatrix a = 0.3 * n * n - 1.1 * n + 0.2 * tb::CMatrix::Identity(16, 16);
  const auto sa = sparse_of(a);
  for (int eta = 0; eta <= 4; eta += 2) {
    double leak = -1.0;
    const auto p = tb::project(sa, tb::fermionic_sector(4, tb::Mapping::JordanWigner, {eta, 0.0, std::nullopt}), &leak);
    EXPECT_LE(tb::spectral_norm(p), tb::spectral_norm(sa) + 1e-10);
    EXPECT_LT(leak, 1e-12);
  }
}

TEST(Project, H2SingletSectorHoldsGroundState) {
  for (auto m : {tb::Mapping::JordanWigner, tb::Mapping::BravyiKitaev}) {
    const auto h = tb::to_sparse(tb::map_to_qubits(h2(), m));
    const auto sec = tb::fermionic_sector(4, m, {2, 0.0, 0.0});
    double leak = -1.0;
    const auto p = tb::project(h, sec, &leak);
    EXPECT_LT(leak, 1e-10);
    EXPECT_NEAR(tb::extreme_eigenvalues(p).min, oracle::lowest(oracle::hamiltonian(h2(), oracle::make_basis(4))), 1e-8);
  }
}

TEST(Project, LeakageDetectsBrokenSymmetry) {
  const auto sec = tb::qubit_sector({{2, tb::parse_pauli("ZZ"), 1.0}}, {1}, 2);
  double leak = 0.0;
  tb::project(tb::to_sparse(sum_of(2, {{"XI", 1.0}})), sec, &leak);
  EXPECT_GT(leak, 0.5);
}

TEST(Labels, H2GroundStateParities) {
  const auto h = tb::to_sparse(tb::map_to_qubits(h2(), tb::Mapping::JordanWigner));
  const auto g = tb::ground_state(h);
  const std::vector<tb::PauliTerm> syms{{4, tb::parse_pauli("ZZZZ"), 1.0}, {4, tb::parse_pauli("ZIZI"), 1.0},
                                        {4, tb::parse_pauli("XIII"), 1.0}};
  // two electrons: even parity; one up electron: odd up parity
  EXPECT_EQ(tb::measure_labels(syms, g.vector), (std::vector<int>{1, -1, 0}));
}
