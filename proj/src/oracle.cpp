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

#include "qtexp/oracle.hpp"

#include <cmath>

namespace qtexp {

Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  const double scale = a.norm();
  if (scale == 0.0) return Eigen::VectorXd::Zero(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        if (p != q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) < 1e-15 * scale) break;

    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  Eigen::VectorXd d = a.diagonal();
  std::sort(d.data(), d.data() + n);
  return d;
}

Vec4 eigvals_hermitian(const Mat4c& h, double tol) {
  if (!h.allFinite()) throw Error("eigvals_hermitian: non-finite input");
  const double residual = (h - h.adjoint()).norm();
  if (residual > tol * std::max(1.0, h.norm())) throw StructureError("hermitian", residual);

  Eigen::MatrixXd big(8, 8);
  big << h.real(), -h.imag(), h.imag(), h.real();
  const Eigen::VectorXd doubled = jacobi_eigenvalues(big);
  Vec4 out;
  for (int k = 0; k < 4; ++k) out(k) = 0.5 * (doubled(2 * k) + doubled(2 * k + 1));
  return out;
}

Eigen::Vector4cd eigvals_anti_hermitian(const Mat4c& x, double tol) {
  const Vec4 lambda = eigvals_hermitian(-kI * x, tol);
  return kI * lambda.cast<cplx>();
}

}  // namespace qtexp
