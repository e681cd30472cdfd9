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

#include "qtexp/linalg3.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qtexp/hh_iso.hpp"

namespace qtexp {
namespace {

// Unit vector orthogonal to v (|v| = 1).
Vec3 any_orthogonal(const Vec3& v) {
  Vec3 axis = Vec3::Zero();
  int k = 0;
  v.cwiseAbs().minCoeff(&k);
  axis(k) = 1.0;
  return v.cross(axis).normalized();
}

// Null vector of the rank-2 matrix m from the largest cross product of its rows.
Vec3 null_vector(const Mat3r& m) {
  const std::array<Vec3, 3> c = {
      Vec3(m.row(0).transpose().cross(m.row(1).transpose())),
      Vec3(m.row(0).transpose().cross(m.row(2).transpose())),
      Vec3(m.row(1).transpose().cross(m.row(2).transpose())),
  };
  const auto best = std::max_element(c.begin(), c.end(), [](const Vec3& a, const Vec3& b) {
    return a.squaredNorm() < b.squaredNorm();
  });
  if (best->squaredNorm() == 0.0) return Vec3::UnitX();
  return best->normalized();
}

}  // namespace

SymEigen3 sym3_eigen(const Mat3r& a_in, double cluster_tol) {
  const Mat3r a = 0.5 * (a_in + a_in.transpose());
  const double scale = a.norm();
  SymEigen3 out{Vec3::Zero(), Mat3r::Identity()};
  if (scale == 0.0) return out;

  const double q = a.trace() / 3.0;
  const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  const double diag = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) + (a(2, 2) - q) * (a(2, 2) - q);
  const double p = std::sqrt((diag + 2.0 * off) / 6.0);
  const double threshold = cluster_tol * scale;

  if (p <= threshold) {
    out.values.setConstant(q);
    return out;
  }

  const Mat3r b = (a - q * Mat3r::Identity()) / p;
  const double r = std::clamp(b.determinant() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double hi = q + 2.0 * p * std::cos(phi);
  const double lo = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double mid = 3.0 * q - hi - lo;

  const double isolated = (hi - mid) >= (mid - lo) ? hi : lo;
  const Vec3 v0 = null_vector(a - isolated * Mat3r::Identity());

  // Diagonalize the restriction to the plane orthogonal to v0.
  const Vec3 w1 = any_orthogonal(v0);
  const Vec3 w2 = v0.cross(w1);
  const double pp = w1.dot(a * w1);
  const double pq = w1.dot(a * w2);
  const double qq = w2.dot(a * w2);
  Vec3 e1 = w1, e2 = w2;
  if (std::abs(pq) > 0.0) {
    const double theta = 0.5 * std::atan2(2.0 * pq, pp - qq);
    const double c = std::cos(theta), s = std::sin(theta);
    e1 = c * w1 + s * w2;
    e2 = -s * w1 + c * w2;
  }

  std::array<std::pair<double, Vec3>, 3> pairs = {{
      {v0.dot(a * v0), v0},
      {e1.dot(a * e1), e1},
      {e2.dot(a * e2), e2},
  }};
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (int k = 0; k < 3; ++k) {
    out.values(k) = pairs[static_cast<std::size_t>(k)].first;
    out.vectors.col(k) = pairs[static_cast<std::size_t>(k)].second;
  }
  return out;
}

RotationSvd3 rotation_svd3(const Mat3r& a, double cluster_tol) {
  RotationSvd3 out{Mat3r::Identity(), Vec3::Zero(), Mat3r::Identity()};
  const double scale = a.norm();
  if (scale == 0.0) return out;

  const SymEigen3 eig = sym3_eigen(a.transpose() * a, cluster_tol);
  Mat3r v;
  for (int k = 0; k < 3; ++k) v.col(k) = eig.vectors.col(2 - k);  // descending
  if (v.determinant() < 0.0) v.col(2) = -v.col(2);

  const double tiny = 1e-14 * scale;
  Mat3r u;
  Vec3 u0 = a * v.col(0);
  if (u0.norm() <= tiny) return out;
  u.col(0) = u0.normalized();
  Vec3 u1 = a * v.col(1);
  u1 -= u.col(0).dot(u1) * u.col(0);
  u.col(1) = u1.norm() > tiny ? Vec3(u1.normalized()) : any_orthogonal(u.col(0));
  u.col(2) = u.col(0).cross(u.col(1));

  for (int k = 0; k < 3; ++k) out.s(k) = u.col(k).dot(a * v.col(k));
  out.u = u;
  out.v = v;
  return out;
}

Vec4 rotation_to_quaternion(const Mat3r& r) {
  const double t = r.trace();
  double w, x, y, z;
  if (t >= r(0, 0) && t >= r(1, 1) && t >= r(2, 2)) {
    w = 0.5 * std::sqrt(std::max(0.0, 1.0 + t));
    x = (r(2, 1) - r(1, 2)) / (4.0 * w);
    y = (r(0, 2) - r(2, 0)) / (4.0 * w);
    z = (r(1, 0) - r(0, 1)) / (4.0 * w);
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    x = 0.5 * std::sqrt(std::max(0.0, 1.0 + r(0, 0) - r(1, 1) - r(2, 2)));
    w = (r(2, 1) - r(1, 2)) / (4.0 * x);
    y = (r(0, 1) + r(1, 0)) / (4.0 * x);
    z = (r(0, 2) + r(2, 0)) / (4.0 * x);
  } else if (r(1, 1) >= r(2, 2)) {
    y = 0.5 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) + r(1, 1) - r(2, 2)));
    w = (r(0, 2) - r(2, 0)) / (4.0 * y);
    x = (r(0, 1) + r(1, 0)) / (4.0 * y);
    z = (r(1, 2) + r(2, 1)) / (4.0 * y);
  } else {
    z = 0.5 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) - r(1, 1) + r(2, 2)));
    w = (r(1, 0) - r(0, 1)) / (4.0 * z);
    x = (r(0, 2) + r(2, 0)) / (4.0 * z);
    y = (r(1, 2) + r(2, 1)) / (4.0 * z);
  }
  Vec4 q(w, x, y, z);
  q.normalize();
  if (q(0) < 0.0) q = -q;
  return q;
}

Mat2c su2_lift(const Mat3r& r) {
  const Vec4 q = rotation_to_quaternion(r);
  return q(0) * pauli_matrix(Pauli::I) -
         kI * (q(1) * pauli_matrix(Pauli::X) + q(2) * pauli_matrix(Pauli::Y) + q(3) * pauli_matrix(Pauli::Z));
}

Mat3r so3_of_su2(const Mat2c& u) {
  Mat3r r;
  for (int j = 0; j < 3; ++j) {
    const Mat2c rotated = u * pauli_matrix(static_cast<Pauli>(j + 1)) * u.adjoint();
    for (int m = 0; m < 3; ++m) r(m, j) = 0.5 * (pauli_matrix(static_cast<Pauli>(m + 1)) * rotated).trace().real();
  }
  return r;
}

Mat3r cofactor_matrix(const Mat3r& c) {
  Mat3r co;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // Cyclic index choice absorbs the (−1)^{i+j} sign.
      co(i, j) = c(r0, c0) * c(r1, c1) - c(r0, c1) * c(r1, c0);
    }
  }
  return co;
}

}  // namespace qtexp
