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

#include <numbers>

#include <gtest/gtest.h>

#include "qtexp/applications.hpp"
#include "qtexp/closed_form.hpp"
#include "qtexp/families.hpp"
#include "qtexp/minpoly.hpp"
#include "qtexp/oracle.hpp"
#include "test_util.hpp"

namespace qtexp {
namespace {

using testing::P;

double oracle_gap(const Mat4c& u, const Mat4c& x) { return (u - expm_reference(x)).norm(); }

TEST(SincHelpers, SeriesMatchesDirectNearCutoff) {
  for (double c : {1e-5, 9.9e-5, 1.01e-4, 1e-3}) {
    EXPECT_NEAR(sinc_sqrt(c * c), std::sin(c) / c, 1e-15);
    EXPECT_NEAR(cos_sqrt(c * c), std::cos(c), 1e-15);
  }
  EXPECT_NEAR(versc_sqrt(1e-3 * 1e-3), 0.5, 1e-7);
  EXPECT_NEAR(versc_sqrt(4.0), (1 - std::cos(2.0)) / 4.0, 1e-15);
  EXPECT_EQ(sinc(0.0), 1.0);
  // Negative c² gives the hyperbolic branch.
  EXPECT_NEAR(std::abs(cos_sqrt(cplx(-4.0, 0.0)) - std::cosh(2.0)), 0.0, 1e-13);
}

TEST(QuadraticI, ZZ) {
  const Mat4c u = exp_quadratic_I(Mat4c(kI * P(Pauli::Z, Pauli::Z)), 1.0);
  const Eigen::Vector4cd expected(std::polar(1.0, 1.0), std::polar(1.0, -1.0), std::polar(1.0, -1.0),
                                  std::polar(1.0, 1.0));
  EXPECT_LT((u - Mat4c(expected.asDiagonal())).norm(), 1e-15);
}

TEST(QuadraticI, SingleQubitRotation) {
  const double a = 0.3, b = -1.2, c = 2.0, lambda = std::sqrt(a * a + b * b + c * c);
  const Mat4c x = kI * (a * P(Pauli::I, Pauli::X) + b * P(Pauli::I, Pauli::Y) + c * P(Pauli::I, Pauli::Z));
  const Mat4c u = exp_quadratic_I(x, lambda * lambda);
  EXPECT_LT((u - (std::cos(lambda) * Mat4c::Identity() + std::sin(lambda) / lambda * x)).norm(), 1e-15);
  EXPECT_LT(oracle_gap(u, x), 1e-13);
}

TEST(QuadraticI, BranchOfSquareRootIrrelevant) {
  Rng rng(51);
  const Mat4c u = random_unitary(rng);
  const Mat4c y = u * testing::diag_i(2, 2, -2, -2) * u.adjoint();
  EXPECT_LT(oracle_gap(exp_quadratic_I(y, 4.0), y), 1e-12);
  // c² = −4 ± 0i lies on the branch cut of √; both sides give the same result.
  const Mat4c h = Eigen::Vector4cd(2, 2, -2, -2).asDiagonal();
  const Mat4c up = exp_quadratic_I(h, cplx(-4.0, 0.0));
  const Mat4c down = exp_quadratic_I(h, cplx(-4.0, -0.0));
  EXPECT_LT((up - down).norm(), 1e-15);
  EXPECT_LT((up - expm_reference(h)).norm(), 1e-12);
}

TEST(QuadraticI, RejectsWrongPolynomial) {
  try {
    exp_quadratic_I(Mat4c(kI * P(Pauli::Z, Pauli::Z)), 2.0);
    FAIL();
  } catch (const StructureError& e) {
    EXPECT_EQ(e.predicate(), "quadratic-I");
    EXPECT_NEAR(e.residual(), 2.0, 1e-14);
  }
}

TEST(QuadraticII, Heisenberg) {
  Mat4c h = Mat4c::Zero();
  for (int k = 1; k < 4; ++k) h += P(static_cast<Pauli>(k), static_cast<Pauli>(k));
  const Mat4c x = -kI * h;
  // x² − 2ix + 3 = 0
  EXPECT_LT(oracle_gap(exp_quadratic_II(x, cplx(0, -1), 3.0), x), 1e-12);
}

TEST(QuadraticII, ThreeToOneSpectrum) {
  Rng rng(52);
  const Mat4c u = random_unitary(rng);
  const Mat4c x = u * testing::diag_i(-3, 1, 1, 1) * u.adjoint();
  // (x + 3i)(x − i) = x² + 2ix + 3
  EXPECT_LT(oracle_gap(exp_quadratic_II(x, cplx(0, 1), 3.0), x), 1e-12);
}

TEST(QuadraticII, HyperbolicCase) {
  // X = −β + σS with S² = I diagonal, real β and σ.
  const double beta = 0.4, sigma = 1.5;
  const Mat4c s = Eigen::Vector4cd(1, -1, 1, 1).asDiagonal();
  const Mat4c x = -beta * Mat4c::Identity() + sigma * s;
  const cplx gamma = beta * beta - sigma * sigma;
  const Mat4c u = exp_quadratic_II(x, beta, gamma);
  const Mat4c expected = std::exp(-beta) * (std::cosh(sigma) * Mat4c::Identity() + std::sinh(sigma) * s);
  EXPECT_LT((u - expected).norm(), 1e-13);
}

TEST(QuadraticII, ZeroBetaIsRejected) {
  EXPECT_THROW(exp_quadratic_II(Mat4c(kI * P(Pauli::Z, Pauli::Z)), 0.0, 1.0), StructureError);
}

TEST(CubicI, SignedCoefficientFamily) {
  const Mat4c x = kI * (P(Pauli::I, Pauli::X) + P(Pauli::X, Pauli::I) + P(Pauli::Y, Pauli::Y) - P(Pauli::Z, Pauli::Z));
  const Mat4c u = exp_cubic_I(x, 8.0);
  EXPECT_LT(oracle_gap(u, x), 1e-12);
}

TEST(CubicI, RotationGeneratorIsRodrigues) {
  Mat3c y = Mat3c::Zero();
  y(0, 1) = -0.7;
  y(1, 0) = 0.7;
  const Su4Element x = embed_su3(y);
  const Mat4c u = exp_cubic_I(x.entries(), 0.49);
  Mat4c expected = Mat4c::Identity();
  expected(0, 0) = expected(1, 1) = std::cos(0.7);
  expected(1, 0) = std::sin(0.7);
  expected(0, 1) = -std::sin(0.7);
  EXPECT_LT((u - expected).norm(), 1e-15);
}

TEST(CubicI, FirstPowerDenominatorWouldBeWrong) {
  const Mat4c x = kI * (P(Pauli::I, Pauli::X) + P(Pauli::X, Pauli::I) + P(Pauli::Y, Pauli::Y) - P(Pauli::Z, Pauli::Z));
  const double c = std::sqrt(8.0);
  const Mat4c wrong = Mat4c::Identity() + std::sin(c) / c * x + (1 - std::cos(c)) / c * x * x;
  EXPECT_GT(oracle_gap(wrong, x), 0.1);
}

TEST(CubicI, RejectsNonCubic) {
  EXPECT_THROW(exp_cubic_I(Mat4c(testing::diag_i(1, 2, 3, -6)), 1.0), StructureError);
}

TEST(Tridiag, Examples) {
  EXPECT_LT((exp_tridiag({0, 0, 0}).u - Mat4c::Identity()).norm(), 1e-15);
  for (const SymTriDiag s : {SymTriDiag{1, 0, 1}, SymTriDiag{1, 2, 3}, SymTriDiag{-2, 0.5, 0}}) {
    const ExpResult r = exp_tridiag(s);
    EXPECT_EQ(r.method, Method::tridiag);
    EXPECT_LT(oracle_gap(r.u, s.matrix()), 1e-12);
    EXPECT_LT(r.residual, 1e-13);
  }
}

TEST(Perskew, Examples) {
  EXPECT_LT((exp_perskew(Su4Element::zero()).u - Mat4c::Identity()).norm(), 1e-15);

  const ExpResult r = exp_perskew(Su4Element(kI * P(Pauli::Z, Pauli::I)));
  const Eigen::Vector4cd d(std::polar(1.0, 1.0), std::polar(1.0, 1.0), std::polar(1.0, -1.0), std::polar(1.0, -1.0));
  EXPECT_LT((r.u - Mat4c(d.asDiagonal())).norm(), 1e-15);

  const Mat4c x = kI * (1 * P(Pauli::Z, Pauli::I) + 2 * P(Pauli::X, Pauli::Z) + 3 * P(Pauli::Y, Pauli::Z) +
                        4 * P(Pauli::I, Pauli::Z) + 5 * P(Pauli::Z, Pauli::X) + 6 * P(Pauli::Z, Pauli::Y));
  EXPECT_LT(oracle_gap(exp_perskew(Su4Element(x)).u, x), 1e-12);
  EXPECT_THROW(exp_perskew(Su4Element(kI * P(Pauli::Z, Pauli::Z))), StructureError);
}

TEST(Perskew, FactorsCommute) {
  Rng rng(53);
  for (int n = 0; n < 50; ++n) {
    const auto f = perskew_factors(random_member(Family::perskew, rng));
    EXPECT_LT((f[0] * f[1] - f[1] * f[0]).norm(), 1e-12);
  }
}

TEST(SkewHamiltonian, Examples) {
  const ExpResult phase = exp_skewham(Su4Element(0.7 * kI * Mat4c::Identity()));
  EXPECT_LT((phase.u - std::polar(1.0, 0.7) * Mat4c::Identity()).norm(), 1e-15);

  const ExpResult one = exp_skewham(Su4Element(kI * P(Pauli::Y, Pauli::Y)));
  EXPECT_LT((one.u - (std::cos(1.0) * Mat4c::Identity() + kI * std::sin(1.0) * P(Pauli::Y, Pauli::Y))).norm(), 1e-15);

  const Mat4c x = kI * (0.5 * Mat4c::Identity() + 1 * P(Pauli::Y, Pauli::Y) + 2 * P(Pauli::I, Pauli::Z) +
                        3 * P(Pauli::I, Pauli::X) + 4 * P(Pauli::Z, Pauli::Y) + 5 * P(Pauli::X, Pauli::Y));
  const ExpResult r = exp_skewham(Su4Element(x));
  EXPECT_LT(oracle_gap(r.u, x), 1e-12);
  EXPECT_NEAR(std::abs(r.u.determinant() - std::polar(1.0, 2.0)), 0.0, 1e-10);
}

TEST(ImaginarySymmetric, Examples) {
  EXPECT_LT((exp_imaginary_symmetric(Su4Element::zero()).u - Mat4c::Identity()).norm(), 1e-15);

  const Vec3 d(0.4, -1.1, 2.5);
  const Mat4c x = canonical_matrix(Vec3::Zero(), Vec3::Zero(), d);
  Mat4c expected = Mat4c::Identity();
  for (int k = 0; k < 3; ++k) {
    const Pauli s = static_cast<Pauli>(k + 1);
    expected *= std::cos(d(k)) * Mat4c::Identity() + kI * std::sin(d(k)) * P(s, s);
  }
  EXPECT_LT((exp_imaginary_symmetric(Su4Element(x)).u - expected).norm(), 1e-13);
  EXPECT_THROW(exp_imaginary_symmetric(Su4Element(kI * P(Pauli::Y, Pauli::I))), StructureError);
}

TEST(ImaginarySymmetric, FactorsCommute) {
  Rng rng(54);
  for (int n = 0; n < 100; ++n) {
    const Su4Element x = random_member(Family::imsym, rng);
    const auto f = imsym_factors(x.quintuple().cmat);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) EXPECT_LT((f[a] * f[b] - f[b] * f[a]).norm(), 1e-12);
    EXPECT_LT(oracle_gap(f[0] * f[1] * f[2], x.traceless()), 1e-12);
  }
}

TEST(Bisymmetric, MatchesGeneralAlgorithm) {
  const ScalarCouplingParams p{0.0, 0.2, 0.3, 0.4, 0.5, 0.6, 1.0};
  const Su4Element x = scalar_coupling_generator(p);
  const auto fast = exp_bisymmetric_fast(x);
  ASSERT_TRUE(fast);
  EXPECT_EQ(fast->method, Method::bisym);
  EXPECT_LT((fast->u - exp_imaginary_symmetric(x).u).norm(), 1e-12);
}

TEST(Bisymmetric, DegenerateAngle) {
  Mat3r c = Mat3r::Zero();
  c(0, 0) = 1.0;
  c(1, 1) = 1.0;
  c(2, 2) = 2.0;
  const Su4Element x(make_quintuple(Vec3::Zero(), Vec3::Zero(), c).matrix());
  const auto r = exp_bisymmetric_fast(x);
  ASSERT_TRUE(r);
  EXPECT_LT(oracle_gap(r->u, x.entries()), 1e-12);
}

TEST(Bisymmetric, SignalsMissingPattern) {
  Rng rng(55);
  EXPECT_FALSE(exp_bisymmetric_fast(random_member(Family::imsym, rng)));
  EXPECT_FALSE(exp_bisymmetric_fast(Su4Element(kI * P(Pauli::Y, Pauli::I))));
}

TEST(NormalSplit, PureRealPart) {
  const QuintupleDecomp d = make_quintuple(Vec3(0.3, -1, 2), Vec3(1, 1, 0.5), Mat3r::Zero());
  const Su4Element x(d.matrix());
  EXPECT_LT(oracle_gap(exp_normal_split(x).u, x.entries()), 1e-12);
}

TEST(NormalSplit, PureImaginaryPart) {
  Rng rng(56);
  const Su4Element x = random_member(Family::imsym, rng);
  EXPECT_LT((exp_normal_split(x).u - exp_imaginary_symmetric(x).u).norm(), 1e-13);
}

TEST(NormalSplit, CommutingLocalAndInteraction) {
  // a_l c_m = b_l c_n and a_l c_n = b_l c_m for all l.
  const Vec3 a(1, 0, 0), b(1, 0, 0), c(0, 2, 2);
  const Mat4c y = canonical_matrix(a, b, c);
  const Su4Element x(magic_basis().adjoint() * y * magic_basis());
  ASSERT_TRUE(is_normal_type(x.quintuple()).normal);
  EXPECT_LT(oracle_gap(exp_normal_split(x).u, x.entries()), 1e-12);
}

TEST(NormalSplit, RejectsNonCommuting) {
  Rng rng(57);
  EXPECT_THROW(exp_normal_split(random_su4(rng)), StructureError);
}

TEST(Auto, DispatchExamples) {
  EXPECT_EQ(exp_auto(rabi_generator({1, 2, 3, 0, 0.7})).method, Method::tridiag);
  EXPECT_EQ(exp_auto(scalar_coupling_generator({})).method, Method::bisym);
  EXPECT_EQ(exp_auto(Su4Element(kI * P(Pauli::Z, Pauli::Z))).method, Method::quad_I);

  Rng rng(58);
  const Su4Element dense = random_su4(rng);
  const ExpResult r = exp_auto(dense);
  EXPECT_EQ(r.method, Method::oracle);
  EXPECT_LT(r.residual, 1e-10);

  AutoOptions closed_only;
  closed_only.allow_oracle = false;
  EXPECT_THROW(exp_auto(dense, closed_only), StructureError);
}

TEST(Auto, MagicBasisPath) {
  // V*·(perskew element)·V is none of the direct patterns.
  const Mat4c z = kI * (0.7 * P(Pauli::Z, Pauli::I) + 1.3 * P(Pauli::X, Pauli::Z) - 0.4 * P(Pauli::Y, Pauli::Z) +
                        0.9 * P(Pauli::I, Pauli::Z) + 2.0 * P(Pauli::Z, Pauli::X) + 0.3 * P(Pauli::Z, Pauli::Y));
  const Su4Element x(magic_basis().adjoint() * z * magic_basis());
  const ExpResult r = exp_auto(x);
  EXPECT_EQ(r.method, Method::magic);
  EXPECT_LT(oracle_gap(r.u, x.entries()), 1e-12);
}

TEST(Auto, EveryFamilyAgreesWithOracle) {
  Rng rng(59);
  for (Family f : all_families()) {
    for (int n = 0; n < 50; ++n) {
      const Su4Element x = random_member(f, rng);
      AutoOptions o;
      o.verify = true;
      const ExpResult r = exp_auto(x, o);
      EXPECT_NE(r.method, Method::oracle) << to_string(f);
      EXPECT_LT(r.residual, 1e-10) << to_string(f);
      EXPECT_NEAR(std::abs(r.u.determinant() - std::polar(1.0, 4.0 * x.scalar_part())), 0.0, 1e-10);
    }
  }
}

TEST(Auto, TimeScaling) {
  Rng rng(60);
  for (Family f : all_families()) {
    const Su4Element x = random_member(f, rng, 1.0);
    for (double t : {0.1, 1.0, 10.0}) {
      const Su4Element xt(t * x.entries());
      EXPECT_LT(oracle_gap(exp_auto(xt).u, xt.entries()), 1e-9) << to_string(f) << " t=" << t;
    }
  }
}

TEST(Method, NamesRoundTrip) {
  for (Method m : {Method::quad_I, Method::quad_II, Method::cubic_I, Method::tridiag, Method::perskew,
                   Method::skewham, Method::imsym, Method::bisym, Method::normal_split, Method::magic,
                   Method::oracle})
    EXPECT_EQ(method_from_string(to_string(m)), m);
  EXPECT_FALSE(method_from_string("pade"));
}

}  // namespace
}  // namespace qtexp
