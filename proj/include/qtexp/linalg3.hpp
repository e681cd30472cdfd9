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

// Closed-form spectral tools for the real 3×3 matrices that show up in the
// quaternion-tensor representation (the interaction matrix γ, the
// imaginary-symmetric coefficient matrix [r|s|t]).

#include "qtexp/types.hpp"

namespace qtexp {

/// Eigen-decomposition of a real symmetric 3×3 matrix. `values` ascending,
/// `vectors` has the matching orthonormal eigenvectors as columns.
struct SymEigen3 {
  Vec3 values;
  Mat3r vectors;
};

/// Trigonometric (Cardano) eigenvalues; the most isolated eigenvector comes
/// from a cross product of rows of A − λI and the remaining pair from a 2×2
/// rotation in its orthogonal complement. Eigenvalues closer than
/// `cluster_tol`·‖A‖_F are treated as repeated.
SymEigen3 sym3_eigen(const Mat3r& a, double cluster_tol = 1e-9);

/// a = u · diag(s) · vᵀ with u, v ∈ SO(3). Singular values are ordered by
/// decreasing magnitude; s(2) carries the sign needed to keep both factors
/// proper rotations.
struct RotationSvd3 {
  Mat3r u;
  Vec3 s;
  Mat3r v;
};

RotationSvd3 rotation_svd3(const Mat3r& a, double cluster_tol = 1e-9);

/// Unit quaternion (w, x, y, z) with w ≥ 0 for a proper rotation matrix.
Vec4 rotation_to_quaternion(const Mat3r& r);

/// SU(2) preimage U of a rotation R under the double cover, satisfying
/// U σ_j U† = Σ_m R(m, j) σ_m. Of ±U the one with nonnegative real trace is
/// returned.
Mat2c su2_lift(const Mat3r& r);

/// Rotation R with U σ_j U† = Σ_m R(m, j) σ_m, for U ∈ SU(2).
Mat3r so3_of_su2(const Mat2c& u);

/// Cofactor matrix: Co(C)(i, j) = (−1)^{i+j} · minor(i, j). adj(C) = Co(C)ᵀ.
Mat3r cofactor_matrix(const Mat3r& c);

}  // namespace qtexp
