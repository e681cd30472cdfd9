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

#pragma once

// The slow, trusted reference path. Nothing here knows about quaternions or
// any closed form; every closed-form result is checked against it.

#include <algorithm>
#include <cmath>

#include <Eigen/Core>

#include "qtexp/error.hpp"
#include "qtexp/types.hpp"

namespace qtexp {

struct OracleConfig {
  double taylor_tolerance = 1e-14;
  int max_squarings = 32;
};

/// Scaling and squaring with a truncated Taylor series: A is scaled by 2^-s,
/// s = max(0, ⌈log₂‖A‖₁⌉) capped at max_squarings; the series runs until a
/// term's 1-norm drops below taylor_tolerance; the result is squared s times.
template <typename Derived>
typename Derived::PlainObject expm_reference(const Eigen::MatrixBase<Derived>& a, const OracleConfig& cfg = {}) {
  using Plain = typename Derived::PlainObject;
  using RealScalar = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (!(cfg.taylor_tolerance > 0)) throw Error("expm_reference: taylor_tolerance must be positive");
  if (!a.allFinite()) throw Error("expm_reference: non-finite input");

  const RealScalar norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > RealScalar(1)) squarings = static_cast<int>(std::ceil(std::log2(norm1)));
  squarings = std::clamp(squarings, 0, cfg.max_squarings);

  const Plain scaled = a.derived() / std::ldexp(RealScalar(1), squarings);
  Plain sum = Plain::Identity(a.rows(), a.cols());
  Plain term = Plain::Identity(a.rows(), a.cols());
  for (int k = 1; k < 200; ++k) {
    term = (term * scaled) / RealScalar(k);
    sum += term;
    if (term.cwiseAbs().colwise().sum().maxCoeff() < cfg.taylor_tolerance) break;
  }
  for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
  return sum;
}

/// Eigenvalues (ascending) of a real symmetric matrix by cyclic Jacobi
/// sweeps; stops when the off-diagonal Frobenius mass falls below
/// 1e-15·‖A‖_F.
Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a);

/// Eigenvalues (ascending) of a Hermitian 4×4 matrix. Runs the cyclic
/// Jacobi sweeps on the real symmetric 8×8 embedding [[Re, −Im], [Im, Re]],
/// whose spectrum is that of H with every eigenvalue doubled.
/// Throws StructureError when ‖H − H*‖_F > tol.
Vec4 eigvals_hermitian(const Mat4c& h, double tol = 1e-12);

/// Eigenvalues of an anti-Hermitian X, returned as the complex numbers i·λ
/// with λ the eigenvalues of −iX.
Eigen::Vector4cd eigvals_anti_hermitian(const Mat4c& x, double tol = 1e-12);

}  // namespace qtexp
