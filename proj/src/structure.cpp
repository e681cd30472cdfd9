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

#include "qtexp/structure.hpp"

#include <algorithm>
#include <cmath>

namespace qtexp {

Mat4c SymTriDiag::matrix() const {
  Mat4r t = Mat4r::Zero();
  t(0, 1) = t(1, 0) = alpha;
  t(1, 2) = t(2, 1) = beta;
  t(2, 3) = t(3, 2) = gamma;
  return kI * t.cast<cplx>();
}

Mat4r reversal4() { return Mat4r::Identity().rowwise().reverse(); }

Mat4r symplectic4() {
  Mat4r j = Mat4r::Zero();
  j.topRightCorner<2, 2>() = Eigen::Matrix2d::Identity();
  j.bottomLeftCorner<2, 2>() = -Eigen::Matrix2d::Identity();
  return j;
}

double structure_scale(const Mat4c& x) { return std::max(1.0, x.norm()); }

double perskew_residual(const Su4Element& x) {
  const Mat4c y = x.traceless();
  const Mat4c r = reversal4().cast<cplx>();
  return (y.transpose() * r + r * y).norm();
}

double skewham_residual(const Su4Element& x) {
  const Mat4c j = symplectic4().cast<cplx>();
  return (x.entries().transpose() * j - j * x.entries()).norm();
}

double imaginary_symmetric_residual(const Su4Element& x) { return x.traceless().real().norm(); }

bool is_perskew(const Su4Element& x, double tol) {
  return perskew_residual(x) <= tol * structure_scale(x.entries());
}

bool is_skewham(const Su4Element& x, double tol) {
  return skewham_residual(x) <= tol * structure_scale(x.entries());
}

bool is_imaginary_symmetric(const Su4Element& x, double tol) {
  return imaginary_symmetric_residual(x) <= tol * structure_scale(x.entries());
}

std::optional<SymTriDiag> tridiag_of(const Su4Element& x, double tol) {
  const Mat4c y = x.traceless();
  const SymTriDiag s{y(0, 1).imag(), y(1, 2).imag(), y(2, 3).imag()};
  if ((y - s.matrix()).norm() > tol * structure_scale(x.entries())) return std::nullopt;
  return s;
}

std::optional<std::pair<int, int>> bisym_pattern(const Mat3r& cmat, double tol) {
  const double limit = tol * std::max(1.0, cmat.norm());
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      double off = 0.0;
      for (int k = 0; k < 3; ++k) {
        if (k != col) off += cmat(row, k) * cmat(row, k);
        if (k != row) off += cmat(k, col) * cmat(k, col);
      }
      if (std::sqrt(off) <= limit) return std::make_pair(row, col);
    }
  }
  return std::nullopt;
}

}  // namespace qtexp
