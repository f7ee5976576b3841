// Copyright 2026 The adaptpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "adaptpf/pauli.hpp"
#include "oracle.hpp"

using namespace adaptpf;
using cd = std::complex<double>;

TEST(PauliWord, ParseEncodesMasks) {
  const auto w = parse_word("IXYZ", 4);
  EXPECT_EQ(w.x_mask(), 0b0110u);
  EXPECT_EQ(w.z_mask(), 0b1100u);
  EXPECT_EQ(w.weight(), 3);
  EXPECT_EQ(w.y_count(), 1);
  EXPECT_EQ(w.to_string(), "IXYZ");

  const auto id = parse_word("IIII", 4);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id, PauliWord(4));
}

TEST(PauliWord, ParseErrorsNamePosition) {
  try {
    parse_word("ZZ", 3);
    FAIL() << "length mismatch accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_word("XQZ", 3);
    FAIL() << "illegal letter accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
    EXPECT_NE(std::string(e.what()).find("position 1"), std::string::npos);
  }
}

TEST(PauliWord, MasksBeyondWidthRejected) {
  EXPECT_THROW(PauliWord(2, 0b100, 0), ContractError);
  EXPECT_THROW(PauliWord(0), ContractError);
  EXPECT_NO_THROW(PauliWord(64, ~0ULL, 0));
}

TEST(PauliWord, UsableAsSetKey) {
  std::unordered_set<PauliWord, PauliWordHash> set;
  set.insert(parse_word("XZ", 2));
  set.insert(parse_word("XZ", 2));
  set.insert(parse_word("ZX", 2));
  EXPECT_EQ(set.size(), 2u);
}

TEST(Multiply, SingleQubitTable) {
  const auto x = parse_word("X", 1);
  const auto y = parse_word("Y", 1);
  const auto z = parse_word("Z", 1);
  auto xz = multiply(x, z);
  EXPECT_EQ(xz.phase, cd(0, -1));
  EXPECT_EQ(xz.product, y);
  auto xy = multiply(x, y);
  EXPECT_EQ(xy.phase, cd(0, 1));
  EXPECT_EQ(xy.product, z);
  auto zx = multiply(z, x);
  EXPECT_EQ(zx.phase, cd(0, 1));
  EXPECT_EQ(zx.product, y);
}

TEST(Multiply, IdentityAndInvolution) {
  const auto p = parse_word("XYZ", 3);
  auto ip = multiply(PauliWord(3), p);
  EXPECT_EQ(ip.phase, cd(1, 0));
  EXPECT_EQ(ip.product, p);
  auto yz = multiply(parse_word("YZ", 2), parse_word("YZ", 2));
  EXPECT_EQ(yz.phase, cd(1, 0));
  EXPECT_TRUE(yz.product.is_identity());
}

TEST(Multiply, DimensionMismatch) {
  EXPECT_THROW(multiply(parse_word("X", 1), parse_word("XX", 2)),
               DimensionError);
  EXPECT_THROW(commutes(parse_word("X", 1), parse_word("XX", 2)),
               DimensionError);
}

TEST(Commutes, Examples) {
  EXPECT_FALSE(commutes(parse_word("X", 1), parse_word("Z", 1)));
  EXPECT_TRUE(commutes(parse_word("XI", 2), parse_word("XX", 2)));
  EXPECT_TRUE(commutes(parse_word("ZZ", 2), parse_word("XX", 2)));

  // Dense check of the ZZ/XX case.
  const auto zz = oracle::pauli_matrix(parse_word("ZZ", 2));
  const auto xx = oracle::pauli_matrix(parse_word("XX", 2));
  EXPECT_LT((zz * xx - xx * zz).cwiseAbs().maxCoeff(), 1e-15);
}

// Exhaustive over all 2-qubit pairs and randomized at 4 qubits: the symbolic
// product must equal the dense matrix product.
TEST(Multiply, MatchesDenseOracle) {
  auto check = [](const PauliWord& p, const PauliWord& q) {
    const auto prod = multiply(p, q);
    const Eigen::MatrixXcd lhs =
        oracle::pauli_matrix(p) * oracle::pauli_matrix(q);
    const Eigen::MatrixXcd rhs = prod.phase * oracle::pauli_matrix(prod.product);
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12)
        << p.to_string() << " * " << q.to_string();
    const Eigen::MatrixXcd comm = lhs - oracle::pauli_matrix(q) *
                                            oracle::pauli_matrix(p);
    EXPECT_EQ(commutes(p, q), comm.cwiseAbs().maxCoeff() < 1e-12);
  };
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      check(PauliWord(2, a & 3, a >> 2), PauliWord(2, b & 3, b >> 2));
    }
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    check(oracle::random_word(rng, 4), oracle::random_word(rng, 4));
  }
}

TEST(Multiply, Properties) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto p = oracle::random_word(rng, n);
    const auto q = oracle::random_word(rng, n);
    const auto pp = multiply(p, p);
    EXPECT_EQ(pp.phase, cd(1, 0));
    EXPECT_TRUE(pp.product.is_identity());

    EXPECT_EQ(commutes(p, q), commutes(q, p));
    const auto pq = multiply(p, q);
    const auto qp = multiply(q, p);
    EXPECT_EQ(pq.product, qp.product);
    EXPECT_EQ(pq.product.x_mask(), p.x_mask() ^ q.x_mask());
    EXPECT_EQ(pq.product.z_mask(), p.z_mask() ^ q.z_mask());
    EXPECT_EQ(pq.phase, commutes(p, q) ? qp.phase : -qp.phase);
  }
}

TEST(Hamiltonian, MergesDuplicatesInFirstAppearanceOrder) {
  Hamiltonian h(2, {{0.5, parse_word("ZZ", 2)},
                    {0.3, parse_word("XI", 2)},
                    {0.25, parse_word("ZZ", 2)}});
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0].word, parse_word("ZZ", 2));
  EXPECT_DOUBLE_EQ(h[0].coeff, 0.75);
  EXPECT_EQ(h[1].word, parse_word("XI", 2));
  EXPECT_DOUBLE_EQ(h.weight_sum(), 1.05);
}

TEST(Hamiltonian, DropsCancelledTerms) {
  Hamiltonian h(1, {{0.5, parse_word("Z", 1)},
                    {0.2, parse_word("X", 1)},
                    {-0.5, parse_word("Z", 1)}});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].word, parse_word("X", 1));
  Hamiltonian tiny(1, {{1e-13, parse_word("Z", 1)}});
  EXPECT_EQ(tiny.size(), 0u);
}

TEST(Hamiltonian, RejectsBadTerms) {
  EXPECT_THROW(Hamiltonian(2, {{1.0, parse_word("Z", 1)}}), DimensionError);
  EXPECT_THROW(Hamiltonian(1, {{std::nan(""), parse_word("Z", 1)}}),
               ContractError);
}
