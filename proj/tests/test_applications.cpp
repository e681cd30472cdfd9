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

#include <gtest/gtest.h>

#include <random>

#include "qtexp/applications.hpp"
#include "qtexp/families.hpp"
#include "qtexp/oracle.hpp"
#include "test_util.hpp"

namespace qtexp {
namespace {

double entry_err(const Mat4c& a, const Mat4c& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(Rabi, DefaultsMatchOracle) {
  const RabiParams p;
  const ExpResult r = rabi_propagator(p);
  EXPECT_EQ(r.method, Method::tridiag);
  EXPECT_LT(entry_err(r.u, expm_reference(rabi_generator(p).entries())), 1e-12);
}

TEST(Rabi, GeneratorShape) {
  const RabiParams p{1, 2, 3, 0.5, 0.7};
  const Mat4c x = rabi_generator(p).entries();
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(x(k, k) - cplx(0, -0.35)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x(0, 1) - cplx(0, -0.7)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x(1, 2) - cplx(0, -1.4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x(2, 3) - cplx(0, -2.1)), 0.0, 1e-15);
  EXPECT_EQ(x(0, 2), cplx(0.0, 0.0));
}

TEST(Rabi, GroupProperty) {
  RabiParams a{0.3, -1.2, 2.0, 0.4, 0.6}, b = a, ab = a;
  b.t = 1.1;
  ab.t = a.t + b.t;
  EXPECT_LT((rabi_propagator(a).u * rabi_propagator(b).u - rabi_propagator(ab).u).norm(), 1e-12);
}

TEST(Josephson, DefaultsMatchOracle) {
  const JosephsonParams p;
  const ExpResult r = josephson_propagator(p);
  EXPECT_EQ(r.method, Method::bisym);
  EXPECT_LT(entry_err(r.u, expm_reference(josephson_generator(p).entries())), 1e-12);
  EXPECT_NEAR(josephson_generator(p).scalar_part(), -0.5 * (p.E00 + p.E10) * p.t, 1e-15);
}

TEST(Josephson, ZeroTunnelingIsDiagonal) {
  const JosephsonParams p{1.0, 0.25, 0.0, 0.0, 1.5};
  const Mat4c u = josephson_propagator(p).u;
  const Eigen::Vector4cd d(std::polar(1.0, -1.5), std::polar(1.0, -0.375), std::polar(1.0, -0.375),
                           std::polar(1.0, -1.5));
  EXPECT_LT((u - Mat4c(d.asDiagonal())).norm(), 1e-13);
}

TEST(ScalarCoupling, DefaultsMatchOracle) {
  const ScalarCouplingParams p;
  const ExpResult r = scalar_coupling_propagator(p);
  EXPECT_EQ(r.method, Method::bisym);
  EXPECT_LT(entry_err(r.u, expm_reference(scalar_coupling_generator(p).entries())), 1e-12);
}

TEST(ScalarCoupling, AllZeroIsIdentity) {
  const ScalarCouplingParams p{0, 0, 0, 0, 0, 0, 1};
  EXPECT_LT((scalar_coupling_propagator(p).u - Mat4c::Identity()).norm(), 1e-15);
}

TEST(ScalarCoupling, OnlyScalarIsPhase) {
  const ScalarCouplingParams p{0.8, 0, 0, 0, 0, 0, 2};
  EXPECT_LT((scalar_coupling_propagator(p).u - std::polar(1.0, 1.6) * Mat4c::Identity()).norm(), 1e-14);
}

TEST(PhysicalModels, RandomParametersMatchOracle) {
  Rng rng(71);
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_real_distribution<double> time(0.05, 3);
  for (int n = 0; n < 50; ++n) {
    const RabiParams rp{u(rng), u(rng), u(rng), u(rng), time(rng)};
    EXPECT_LT(entry_err(rabi_propagator(rp).u, expm_reference(rabi_generator(rp).entries())), 1e-10);

    const JosephsonParams jp{u(rng), u(rng), u(rng), u(rng), time(rng)};
    EXPECT_LT(entry_err(josephson_propagator(jp).u, expm_reference(josephson_generator(jp).entries())), 1e-10);

    const ScalarCouplingParams sp{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), time(rng)};
    EXPECT_LT(entry_err(scalar_coupling_propagator(sp).u, expm_reference(scalar_coupling_generator(sp).entries())),
              1e-10);
  }
}

TEST(PhysicalModels, AutoDispatchAvoidsOracle) {
  Rng rng(72);
  std::uniform_real_distribution<double> u(-3, 3);
  AutoOptions opts;
  opts.allow_oracle = false;
  for (int n = 0; n < 20; ++n) {
    const RabiParams rp{u(rng), u(rng), u(rng), 0.0, 1.0};
    EXPECT_EQ(exp_auto(rabi_generator(rp), opts).method, Method::tridiag);
    const JosephsonParams jp{u(rng), u(rng), u(rng), u(rng), 1.0};
    EXPECT_NE(exp_auto(josephson_generator(jp), opts).method, Method::oracle);
  }
}

}  // namespace
}  // namespace qtexp
