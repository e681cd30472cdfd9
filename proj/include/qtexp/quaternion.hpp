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

#include <cmath>
#include <ostream>

#include <Eigen/Core>

namespace qtexp {

/// Quaternion w + x·i + y·j + z·k over an arbitrary real scalar. No unit-norm
/// constraint is imposed.
template <typename Scalar>
struct Quaternion {
  Scalar w{0}, x{0}, y{0}, z{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(Scalar w_, Scalar x_, Scalar y_, Scalar z_) : w{w_}, x{x_}, y{y_}, z{z_} {}

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }

  /// Coordinates in the ordered basis (1, i, j, k).
  Eigen::Matrix<Scalar, 4, 1> coords() const { return {w, x, y, z}; }
  static Quaternion from_coords(const Eigen::Matrix<Scalar, 4, 1>& c) { return {c(0), c(1), c(2), c(3)}; }

  constexpr Scalar norm_sq() const { return w * w + x * x + y * y + z * z; }
  Scalar norm() const { return std::sqrt(norm_sq()); }

  constexpr bool operator==(const Quaternion&) const = default;
};

/// Purely imaginary quaternion x·i + y·j + z·k, identified with a vector of R³.
template <typename Scalar>
struct PureQuaternion {
  Scalar x{0}, y{0}, z{0};

  constexpr PureQuaternion() = default;
  constexpr PureQuaternion(Scalar x_, Scalar y_, Scalar z_) : x{x_}, y{y_}, z{z_} {}
  explicit PureQuaternion(const Eigen::Matrix<Scalar, 3, 1>& v) : x{v(0)}, y{v(1)}, z{v(2)} {}

  Eigen::Matrix<Scalar, 3, 1> vec() const { return {x, y, z}; }
  constexpr Quaternion<Scalar> quat() const { return {0, x, y, z}; }

  constexpr Scalar norm_sq() const { return x * x + y * y + z * z; }
  Scalar norm() const { return std::sqrt(norm_sq()); }

  constexpr bool operator==(const PureQuaternion&) const = default;
};

using Quat = Quaternion<double>;
using PureQuat = PureQuaternion<double>;

template <typename S>
constexpr Quaternion<S> operator+(const Quaternion<S>& a, const Quaternion<S>& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

template <typename S>
constexpr Quaternion<S> operator-(const Quaternion<S>& a, const Quaternion<S>& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

template <typename S>
constexpr Quaternion<S> operator-(const Quaternion<S>& a) {
  return {-a.w, -a.x, -a.y, -a.z};
}

template <typename S>
constexpr Quaternion<S> operator*(S s, const Quaternion<S>& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

/// Hamilton product: i² = j² = k² = −1, ij = k.
template <typename S>
constexpr Quaternion<S> qmul(const Quaternion<S>& a, const Quaternion<S>& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

template <typename S>
constexpr Quaternion<S> operator*(const Quaternion<S>& a, const Quaternion<S>& b) {
  return qmul(a, b);
}

template <typename S>
constexpr Quaternion<S> conj(const Quaternion<S>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

template <typename S>
constexpr PureQuaternion<S> pure_part(const Quaternion<S>& q) {
  return {q.x, q.y, q.z};
}

template <typename S>
constexpr PureQuaternion<S> operator+(const PureQuaternion<S>& a, const PureQuaternion<S>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

template <typename S>
constexpr PureQuaternion<S> operator-(const PureQuaternion<S>& a, const PureQuaternion<S>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

template <typename S>
constexpr PureQuaternion<S> operator*(S s, const PureQuaternion<S>& a) {
  return {s * a.x, s * a.y, s * a.z};
}

template <typename S>
constexpr S dot(const PureQuaternion<S>& a, const PureQuaternion<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// R³ cross product; equals the pure part of (ab − ba)/2.
template <typename S>
constexpr PureQuaternion<S> cross(const PureQuaternion<S>& a, const PureQuaternion<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Matrix of x ↦ q·x in the basis (1, i, j, k).
template <typename S>
Eigen::Matrix<S, 4, 4> left_mult_matrix(const Quaternion<S>& q) {
  Eigen::Matrix<S, 4, 4> m;
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w, -q.z,  q.y,
       q.y,  q.z,  q.w, -q.x,
       q.z, -q.y,  q.x,  q.w;
  return m;
}

/// Matrix of x ↦ x·q in the basis (1, i, j, k).
template <typename S>
Eigen::Matrix<S, 4, 4> right_mult_matrix(const Quaternion<S>& q) {
  Eigen::Matrix<S, 4, 4> m;
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w,  q.z, -q.y,
       q.y, -q.z,  q.w,  q.x,
       q.z,  q.y, -q.x,  q.w;
  return m;
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const Quaternion<S>& q) {
  return os << '(' << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const PureQuaternion<S>& q) {
  return os << '(' << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

}  // namespace qtexp
