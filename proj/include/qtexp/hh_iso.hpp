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

// Algebra isomorphism H⊗H ≅ gl(4, R): the product tensor p⊗q maps to the
// matrix M_{p⊗q} of x ↦ p·x·q̄, with R⁴ identified with H through the ordered
// basis (1, i, j, k). Products compose as M_{p⊗q}·M_{p'⊗q'} = M_{pp'⊗qq'}.

#include <array>
#include <complex>
#include <string>

#include <Eigen/Core>

#include "qtexp/quaternion.hpp"

namespace qtexp {

/// Index of a quaternion basis unit: 0 → 1, 1 → i, 2 → j, 3 → k.
enum class Unit : int { one = 0, i = 1, j = 2, k = 3 };

template <typename S>
constexpr Quaternion<S> unit_quaternion(Unit u) {
  switch (u) {
    case Unit::one: return Quaternion<S>::one();
    case Unit::i: return Quaternion<S>::unit_i();
    case Unit::j: return Quaternion<S>::unit_j();
    case Unit::k: return Quaternion<S>::unit_k();
  }
  return {};
}

/// M_{p⊗q}: columns are the coordinates of p·1·q̄, p·i·q̄, p·j·q̄, p·k·q̄.
template <typename S>
Eigen::Matrix<S, 4, 4> tensor_matrix(const Quaternion<S>& p, const Quaternion<S>& q) {
  return left_mult_matrix(p) * right_mult_matrix(conj(q));
}

template <typename S>
Eigen::Matrix<S, 4, 4> tensor_matrix(const PureQuaternion<S>& p, const Quaternion<S>& q) {
  return tensor_matrix(p.quat(), q);
}

template <typename S>
Eigen::Matrix<S, 4, 4> tensor_matrix(const Quaternion<S>& p, const PureQuaternion<S>& q) {
  return tensor_matrix(p, q.quat());
}

template <typename S>
Eigen::Matrix<S, 4, 4> tensor_matrix(const PureQuaternion<S>& p, const PureQuaternion<S>& q) {
  return tensor_matrix(p.quat(), q.quat());
}

/// Basis element M_{e_x⊗e_y}.
template <typename S = double>
Eigen::Matrix<S, 4, 4> basis_matrix(Unit x, Unit y) {
  return tensor_matrix(unit_quaternion<S>(x), unit_quaternion<S>(y));
}

template <typename S = double>
Eigen::Matrix<S, 4, 4> basis_matrix(int x, int y) {
  return basis_matrix<S>(static_cast<Unit>(x), static_cast<Unit>(y));
}

/// The 16 coefficients of a real 4×4 matrix in the M_{e_x⊗e_y} basis;
/// coeff(x, y) multiplies M_{e_x⊗e_y}.
template <typename S>
struct QtExpansion {
  Eigen::Matrix<S, 4, 4> coeff = Eigen::Matrix<S, 4, 4>::Zero();

  S operator()(Unit x, Unit y) const { return coeff(static_cast<int>(x), static_cast<int>(y)); }
};

/// The basis matrices are signed permutation matrices, mutually orthogonal
/// under the Frobenius product with ⟨M, M⟩ = 4.
template <typename Derived>
QtExpansion<typename Derived::Scalar> expand(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  static_assert(Derived::RowsAtCompileTime == 4 && Derived::ColsAtCompileTime == 4, "expand needs a 4x4 matrix");
  QtExpansion<S> out;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) out.coeff(x, y) = basis_matrix<S>(x, y).cwiseProduct(a.derived()).sum() / S(4);
  return out;
}

template <typename S>
Eigen::Matrix<S, 4, 4> reconstruct(const QtExpansion<S>& e) {
  Eigen::Matrix<S, 4, 4> out = Eigen::Matrix<S, 4, 4>::Zero();
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (e.coeff(x, y) != S(0)) out += e.coeff(x, y) * basis_matrix<S>(x, y);
  return out;
}

// ---------------------------------------------------------------------------
// Pauli dictionary.

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

/// Names σ_s⊗σ_t.
struct PauliLabel {
  Pauli s = Pauli::I;
  Pauli t = Pauli::I;

  constexpr bool operator==(const PauliLabel&) const = default;
  constexpr int index() const { return 4 * static_cast<int>(s) + static_cast<int>(t); }
};

/// A scaled quaternion-tensor basis element `scale · M_{x⊗y}`.
struct QtTerm {
  std::complex<double> scale;
  Unit x;
  Unit y;
};

Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Kronecker product of two 2×2 matrices.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

/// Kronecker product σ_s ⊗ σ_t.
Eigen::Matrix4cd pauli_kron(PauliLabel label);

/// σ_s⊗σ_t expressed in the quaternion-tensor basis. Every entry is ±1 or ±i
/// times a single basis element; σ_y⊗σ_x ↦ i·M_{k⊗1}.
QtTerm pauli_to_qt(PauliLabel label);

Eigen::Matrix4cd qt_term_matrix(const QtTerm& term);

std::array<PauliLabel, 16> all_pauli_labels();

std::string to_string(PauliLabel label);
std::string to_string(const QtTerm& term);

}  // namespace qtexp
