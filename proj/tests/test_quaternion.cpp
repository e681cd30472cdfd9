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

#include "qtexp/quaternion.hpp"

namespace qtexp {
namespace {

Quat random_quat(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

double dist(const Quat& a, const Quat& b) { return (a.coords() - b.coords()).norm(); }

TEST(Quaternion, DefiningRelations) {
  const Quat i = Quat::unit_i(), j = Quat::unit_j(), k = Quat::unit_k();
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, -Quat::one());
  EXPECT_EQ(i * j * k, -Quat::one());
}

TEST(Quaternion, ProductExamples) {
  EXPECT_EQ(qmul(Quat(1, 1, 0, 0), Quat(1, 0, 1, 0)), Quat(1, 1, 1, 1));
  const Quat p(1, 2, 3, 4);
  EXPECT_EQ(p * conj(p), Quat(30, 0, 0, 0));
}

TEST(Quaternion, Conjugation) {
  EXPECT_EQ(conj(Quat::one()), Quat::one());
  EXPECT_EQ(conj(Quat::unit_i()), -Quat::unit_i());
  EXPECT_EQ(conj(Quat(2, 3, -1, 1)), Quat(2, -3, 1, -1));
}

TEST(Quaternion, AssociativeDistributiveMultiplicative) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    const Quat a = random_quat(rng), b = random_quat(rng), c = random_quat(rng);
    EXPECT_LT(dist((a * b) * c, a * (b * c)), 1e-12);
    EXPECT_LT(dist(a * (b + c), a * b + a * c), 1e-12);
    EXPECT_NEAR((a * b).norm(), a.norm() * b.norm(), 1e-12);
    EXPECT_LT(dist(conj(a * b), conj(b) * conj(a)), 1e-12);
  }
}

TEST(PureQuaternion, SquareIsMinusNormSquared) {
  const PureQuat p(1.0, -2.0, 0.5);
  const Quat sq = p.quat() * p.quat();
  EXPECT_NEAR(sq.w, -p.norm_sq(), 1e-15);
  EXPECT_NEAR(pure_part(sq).norm(), 0.0, 1e-15);
}

TEST(PureQuaternion, ProductIsMinusDotPlusCross) {
  const PureQuat p(1, 2, 3), q(-4, 0.5, 2);
  const Quat pq = p.quat() * q.quat();
  EXPECT_DOUBLE_EQ(pq.w, -dot(p, q));
  EXPECT_EQ(pure_part(pq), cross(p, q));
}

TEST(PureQuaternion, CrossProduct) {
  EXPECT_EQ(cross(PureQuat(1, 0, 0), PureQuat(0, 1, 0)), PureQuat(0, 0, 1));
  EXPECT_EQ(cross(PureQuat(0, 1, 0), PureQuat(1, 0, 0)), PureQuat(0, 0, -1));
  const PureQuat p(1, 2, 3);
  EXPECT_EQ(cross(p, p), PureQuat(0, 0, 0));
}

TEST(Quaternion, MultiplicationMatrices) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    const Quat a = random_quat(rng), x = random_quat(rng);
    EXPECT_LT((left_mult_matrix(a) * x.coords() - (a * x).coords()).norm(), 1e-13);
    EXPECT_LT((right_mult_matrix(a) * x.coords() - (x * a).coords()).norm(), 1e-13);
  }
}

}  // namespace
}  // namespace qtexp
