// Copyright 2026 The qtexp Authors
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

#include "qtexp/hh_iso.hpp"

namespace qtexp {
namespace {

Quat random_quat(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

TEST(TensorMatrix, ActsAsTwoSidedMultiplication) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 100; ++n) {
    const Quat p = random_quat(rng), q = random_quat(rng), x = random_quat(rng);
    EXPECT_LT((tensor_matrix(p, q) * x.coords() - (p * x * conj(q)).coords()).norm(), 1e-13);
  }
}

TEST(TensorMatrix, ComposesWithProductsInBothSlots) {
  std::mt19937_64 rng(2);
  double worst = 0.0, swapped = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Quat p = random_quat(rng), q = random_quat(rng), p2 = random_quat(rng), q2 = random_quat(rng);
    const Eigen::Matrix4d lhs = tensor_matrix(p, q) * tensor_matrix(p2, q2);
    worst = std::max(worst, (lhs - tensor_matrix(p * p2, q * q2)).norm());
    swapped = std::max(swapped, (lhs - tensor_matrix(p * p2, q2 * q)).norm());
  }
  EXPECT_LT(worst, 1e-12);
  // Reversing the second slot is not a homomorphism.
  EXPECT_GT(swapped, 1e-3);
}

TEST(TensorMatrix, BasisIsOrthogonalSignedPermutations) {
  for (int a = 0; a < 16; ++a) {
    const Eigen::Matrix4d ma = basis_matrix(a / 4, a % 4);
    EXPECT_EQ(ma.cwiseAbs().rowwise().sum(), Eigen::Vector4d::Ones());
    for (int b = 0; b < 16; ++b) {
      const double ip = ma.cwiseProduct(basis_matrix(b / 4, b % 4)).sum();
      EXPECT_DOUBLE_EQ(ip, a == b ? 4.0 : 0.0);
    }
  }
}

TEST(Expand, RoundTripsAndPicksOutBasisElements) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Eigen::Matrix4d a;
  for (int i = 0; i < 16; ++i) a(i / 4, i % 4) = u(rng);
  EXPECT_LT((reconstruct(expand(a)) - a).norm(), 1e-13);

  const auto e = expand(basis_matrix(Unit::j, Unit::k));
  EXPECT_DOUBLE_EQ(e(Unit::j, Unit::k), 1.0);
  EXPECT_DOUBLE_EQ(e.coeff.cwiseAbs().sum(), 1.0);
  EXPECT_LT((reconstruct(expand(Eigen::Matrix4d::Identity())) - Eigen::Matrix4d::Identity()).norm(), 1e-15);
}

TEST(PauliTable, EveryRowHoldsEntrywise) {
  for (PauliLabel l : all_pauli_labels()) {
    const Eigen::Matrix4cd diff = qt_term_matrix(pauli_to_qt(l)) - pauli_kron(l);
    EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-14) << to_string(l) << " -> " << to_string(pauli_to_qt(l));
  }
}

TEST(PauliTable, SelectedRows) {
  const QtTerm xx = pauli_to_qt({Pauli::X, Pauli::X});
  EXPECT_EQ(xx.scale, std::complex<double>(1.0, 0.0));
  EXPECT_EQ(xx.x, Unit::j);
  EXPECT_EQ(xx.y, Unit::i);

  const QtTerm zz = pauli_to_qt({Pauli::Z, Pauli::Z});
  EXPECT_EQ(zz.x, Unit::k);
  EXPECT_EQ(zz.y, Unit::k);

  const QtTerm yx = pauli_to_qt({Pauli::Y, Pauli::X});
  EXPECT_EQ(yx.scale, std::complex<double>(0.0, 1.0));
  EXPECT_EQ(yx.x, Unit::k);
  EXPECT_EQ(yx.y, Unit::one);

  const QtTerm xy = pauli_to_qt({Pauli::X, Pauli::Y});
  EXPECT_EQ(xy.scale, std::complex<double>(0.0, -1.0));
  EXPECT_EQ(xy.x, Unit::one);
  EXPECT_EQ(xy.y, Unit::k);
}

TEST(PauliTable, MixedTermMatchesKronecker) {
  const Eigen::Matrix4cd yx = pauli_kron({Pauli::Y, Pauli::X});
  EXPECT_LT((yx - std::complex<double>(0, 1) * basis_matrix(Unit::k, Unit::one).cast<std::complex<double>>()).norm(),
            1e-15);
  EXPECT_GT((yx + std::complex<double>(0, 1) * basis_matrix(Unit::one, Unit::k).cast<std::complex<double>>()).norm(),
            1.0);
}

TEST(PauliTable, LabelsPrint) {
  EXPECT_EQ(to_string(PauliLabel{Pauli::I, Pauli::Z}), "I⊗Z");
}

}  // namespace
}  // namespace qtexp
