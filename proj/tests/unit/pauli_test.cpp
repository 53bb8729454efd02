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

#include <random>

#include <gtest/gtest.h>

#include "pauli_oracle.hpp"
#include "trotterbench/errors.hpp"

namespace tb = trotterbench;

namespace {

tb::PauliTerm term(const std::string& s, tb::Complex c = 1.0) {
  return {static_cast<int>(s.size()), tb::parse_pauli(s), c};
}

std::string random_string(std::mt19937_64& rng, int n) {
  static const char kChars[] = "IXYZ";
  std::string s;
  for (int i = 0; i < n; ++i) s += kChars[rng() % 4];
  return s;
}

}  // namespace

TEST(PauliCommutes, Examples) {
  EXPECT_FALSE(tb::pauli_commutes(term("ZI"), term("XX")));
  EXPECT_TRUE(tb::pauli_commutes(term("XX"), term("YY")));
  EXPECT_TRUE(tb::pauli_commutes(term("XYZ"), term("III")));
  EXPECT_THROW(tb::pauli_commutes(term("X"), term("XX")), tb::DimensionError);
}

TEST(PauliCommutes, AgreesWithDenseCommutatorExhaustively) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 256; ++trial) {
      const auto a = random_string(rng, n), b = random_string(rng, n);
      const auto ma = oracle::pauli_matrix(a), mb = oracle::pauli_matrix(b);
      const bool dense_commutes = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
      EXPECT_EQ(tb::pauli_commutes(term(a), term(b)), dense_commutes) << a << " " << b;
    }
}

TEST(PauliMultiply, XTimesZIsMinusIY) {
  const auto p = tb::pauli_multiply(term("X"), term("Z"));
  EXPECT_EQ(tb::to_string(p.string, 1), "Y");
  EXPECT_EQ(p.coeff, tb::Complex(0.0, -1.0));
}

TEST(PauliMultiply, SquareIsIdentity) {
  for (const char* s : {"X", "Y", "Z", "XYZI", "YYYY"}) {
    const auto p = tb::pauli_multiply(term(s), term(s));
    EXPECT_TRUE(p.string.is_identity());
    EXPECT_EQ(p.coeff, tb::Complex(1.0, 0.0));
  }
  const auto q = tb::pauli_multiply(term("XZ", {0.0, 2.0}), term("XZ", {0.0, 2.0}));
  EXPECT_EQ(q.coeff, tb::Complex(-4.0, 0.0));
}

TEST(PauliMultiply, MatchesDenseProductsAndIsAssociative) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_string(rng, n), b = random_string(rng, n), c = random_string(rng, n);
      const auto ab = tb::pauli_multiply(term(a), term(b));
      const oracle::CMatrix dense = oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
      EXPECT_LT((ab.coeff * oracle::pauli_matrix(tb::to_string(ab.string, n)) - dense).cwiseAbs().maxCoeff(), 1e-14);
      const auto left = tb::pauli_multiply(ab, term(c));
      const auto right = tb::pauli_multiply(term(a), tb::pauli_multiply(term(b), term(c)));
      EXPECT_EQ(left.string, right.string);
      EXPECT_EQ(left.coeff, right.coeff);
    }
}

TEST(PauliSum, PruneAndIdentity) {
  tb::PauliSum s(2);
  s.add(tb::parse_pauli("II"), 0.5);
  s.add(tb::parse_pauli("ZI"), 1e-16);
  s.add(tb::parse_pauli("XX"), -0.25);
  s.prune();
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.identity_coefficient(), tb::Complex(0.5));
  EXPECT_EQ(s.non_identity_count(), 1u);
  EXPECT_DOUBLE_EQ(s.l1_norm(), 0.25);
  EXPECT_THROW(s.add(tb::parse_pauli("IIX"), 1.0), tb::BoundsError);
}

TEST(PauliSum, ProductMatchesDense) {
  std::mt19937_64 rng(3);
  tb::PauliSum a(3), b(3);
  std::normal_distribution<double> dist;
  for (int i = 0; i < 6; ++i) {
    a.add(tb::parse_pauli(random_string(rng, 3)), {dist(rng), dist(rng)});
    b.add(tb::parse_pauli(random_string(rng, 3)), {dist(rng), dist(rng)});
  }
  EXPECT_LT((oracle::dense(a * b) - oracle::dense(a) * oracle::dense(b)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PauliSum, SortedTermsOrderByMagnitudeThenString) {
  tb::PauliSum s(2);
  s.add(tb::parse_pauli("ZI"), 0.5);
  s.add(tb::parse_pauli("XI"), -0.5);
  s.add(tb::parse_pauli("IY"), 2.0);
  const auto t = s.sorted_terms();
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(tb::to_string(t[0].string, 2), "IY");
  EXPECT_EQ(tb::to_string(t[1].string, 2), "XI");
  EXPECT_EQ(tb::to_string(t[2].string, 2), "ZI");
}

TEST(PauliSum, TextAndJsonRoundTrip) {
  tb::PauliSum s(4);
  s.add(tb::parse_pauli("XIYZ"), 0.5);
  s.add(tb::parse_pauli("IIII"), -1.0 / 3.0);
  s.add(tb::parse_pauli("ZZII"), {0.1, -0.2});
  const auto t = tb::pauli_sum_from_text(tb::to_text(s));
  EXPECT_EQ(t.terms(), s.terms());
  const auto j = tb::pauli_sum_from_json(tb::to_json(s));
  EXPECT_EQ(j.terms(), s.terms());
  EXPECT_EQ(tb::pauli_sum_from_text("0.5 XIYZ\n").coefficient(tb::parse_pauli("XIYZ")), tb::Complex(0.5));
  EXPECT_THROW(tb::pauli_sum_from_text("0.5 XQ\n"), tb::ParseError);
  EXPECT_THROW(tb::pauli_sum_from_text("abc XI\n"), tb::ParseError);
}
