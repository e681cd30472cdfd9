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

#include "qtexp/hh_iso.hpp"
#include "qtexp/quaternion.hpp"
#include "qtexp/types.hpp"

namespace qtexp {

/// Real coefficients of a traceless Hermitian 4×4 matrix in the Pauli tensor
/// basis: H = Σ alpha_i I⊗σ_i + Σ beta_i σ_i⊗I + Σ gamma(j,k) σ_j⊗σ_k, with
/// indices 0, 1, 2 standing for x, y, z.
struct PauliCoeffs {
  Vec3 alpha = Vec3::Zero();
  Vec3 beta = Vec3::Zero();
  Mat3r gamma = Mat3r::Zero();
};

/// X − i·b·I = M_{p⊗1} + M_{1⊗q} + i(M_{r⊗i} + M_{s⊗j} + M_{t⊗k}).
/// The first two terms form the real antisymmetric part B, the bracket the
/// real symmetric traceless part C; cmat = [r|s|t].
struct QuintupleDecomp {
  PureQuat p, q, r, s, t;
  Mat3r cmat = Mat3r::Zero();

  Mat4r real_part() const;  // B
  Mat4r imag_part() const;  // C
  Mat4c matrix() const;     // B + iC
};

/// A 4×4 anti-Hermitian matrix X; its trace i·4b is carried as the scalar
/// part b. Both decompositions are computed at construction.
class Su4Element {
 public:
  /// Throws StructureError when X is not anti-Hermitian to `tol`·max(1, ‖X‖_F).
  explicit Su4Element(const Mat4c& entries, double tol = 1e-12);

  static Su4Element zero() { return Su4Element(Mat4c::Zero()); }

  const Mat4c& entries() const { return entries_; }
  double scalar_part() const { return scalar_; }
  /// entries − i·b·I.
  Mat4c traceless() const;
  const PauliCoeffs& pauli() const { return pauli_; }
  const QuintupleDecomp& quintuple() const { return quintuple_; }

  /// The same element with the scalar part removed.
  Su4Element without_scalar() const;

 private:
  Mat4c entries_;
  double scalar_ = 0.0;
  PauliCoeffs pauli_;
  QuintupleDecomp quintuple_;
};

/// ‖X + X*‖_F.
double anti_hermitian_residual(const Mat4c& x);

PauliCoeffs pauli_coeffs(const Su4Element& x);

/// H = Σ alpha_i I⊗σ_i + Σ beta_i σ_i⊗I + Σ gamma(j,k) σ_j⊗σ_k.
Mat4c hamiltonian(const PauliCoeffs& c);

/// i·(H + scalar·I).
Mat4c generator(const PauliCoeffs& c, double scalar = 0.0);

/// Throws StructureError when the 6 + 9 term expansion misses X by more
/// than 1e-10·max(1, ‖X‖_F).
QuintupleDecomp quintuple(const Su4Element& x);

Mat4c from_quintuple(const QuintupleDecomp& d, double scalar = 0.0);

/// Builds the quintuple from p, q and cmat = [r|s|t].
QuintupleDecomp make_quintuple(const Vec3& p, const Vec3& q, const Mat3r& cmat);

/// Result of conjugating by a local unitary U₁⊗U₂ that diagonalizes γ.
/// a multiplies I⊗σ_i, b multiplies σ_i⊗I, c multiplies σ_i⊗σ_i.
struct CanonicalForm {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Vec3 c = Vec3::Zero();
  Mat2c u1 = Mat2c::Identity();
  Mat2c u2 = Mat2c::Identity();
  Mat4c local_unitary = Mat4c::Identity();

  /// i(Σ a_i I⊗σ_i + Σ b_i σ_i⊗I + Σ c_i σ_i⊗σ_i).
  Mat4c matrix() const;
};

/// Scalar part is ignored. local_unitary · X · local_unitary† has the
/// canonical Pauli coefficients.
CanonicalForm canonicalize(const Su4Element& x);

/// X = i(Σ a_i I⊗σ_i + Σ b_i σ_i⊗I + Σ c_i σ_i⊗σ_i).
Mat4c canonical_matrix(const Vec3& a, const Vec3& b, const Vec3& c);

/// The magic basis matrix V, with V·so(4,R)·V* = su(2)⊗su(2).
const Mat4c& magic_basis();

/// V·X·V*.
Su4Element magic_conjugate(const Su4Element& x);

/// V*·X·V.
Su4Element magic_unconjugate(const Su4Element& x);

/// Places an anti-Hermitian traceless 3×3 matrix in the leading block.
Su4Element embed_su3(const Mat3c& y, double tol = 1e-12);

}  // namespace qtexp
