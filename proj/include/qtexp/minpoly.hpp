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

#include <optional>
#include <string>

#include "qtexp/su4.hpp"
#include "qtexp/types.hpp"

namespace qtexp {

/// det(xI − X) = x⁴ + μx² + νx + π for traceless X.
struct CharPolyCoeffs {
  double mu = 0.0;
  cplx nu{0.0, 0.0};
  double pi = 0.0;
};

/// Newton's identities on Tr X², Tr X³, Tr X⁴. Uses the traceless part.
CharPolyCoeffs charpoly(const Su4Element& x);
CharPolyCoeffs charpoly(const Mat4c& traceless);

/// ‖X⁴ + μX² + νX + πI‖_F / max(1, ‖X‖_F⁴).
double cayley_hamilton_residual(const Mat4c& x, const CharPolyCoeffs& c);

/// Closed forms in terms of canonical coefficients:
/// μ = 2Σ(aᵢ² + bᵢ² + cᵢ²), ν = 8i(Σ aᵢbᵢcᵢ − c₁c₂c₃).
/// π is taken from the canonical matrix by Newton's identities.
CharPolyCoeffs canonical_charpoly(const Vec3& a, const Vec3& b, const Vec3& c);

/// The long expanded expression for π in canonical coefficients, read with
/// the inner square applied termwise. Kept for comparison only: it does not
/// reproduce the constant term (it gives −1/2 for iσ_z⊗σ_z, where π = 1).
double expanded_pi_formula(const Vec3& a, const Vec3& b, const Vec3& c);

enum class MinPolyTag { quadratic_I, quadratic_II, cubic_I, quartic_distinct, other };

std::string to_string(MinPolyTag tag);

/// quadratic-I: X² + c2·I = 0. cubic-I: X³ + c2·X = 0.
/// quadratic-II: X² + 2βX + γI = 0 with β = iβ̃ ≠ 0.
struct MinPolyClass {
  MinPolyTag tag = MinPolyTag::other;
  cplx c2{0.0, 0.0};
  cplx beta{0.0, 0.0};
  cplx gamma{0.0, 0.0};
  double beta_tilde = 0.0;
  CharPolyCoeffs coeffs;
};

/// Relative tolerance 1e-9 on (μ, ν, π) with μ as the scale. The zero
/// matrix is tagged `other`.
MinPolyClass classify(const Su4Element& x, double tol = 1e-9);

/// Solves Cᵀp = β̃q, Cq = β̃p, pqᵀ − Co(C) = β̃C for a nonzero real β̃.
/// Co is the cofactor matrix (no transpose).
std::optional<double> check_quadratic_II_conditions(const QuintupleDecomp& d, double tol = 1e-9);

/// β̃ = √(1 + pᵀp), C = √(I + ppᵀ)·diag(1, 1, −1), q = C⁻¹(β̃p).
/// Throws Error for p = 0.
Su4Element construct_quadratic_II_example(const PureQuat& p);

/// C = uvᵀ with |u|² = |v|² = β̃, p = √β̃·u, q = √β̃·v. The directions u, v
/// are rescaled; β̃ > 0.
Su4Element construct_rank_one_example(const Vec3& u, const Vec3& v, double beta_tilde);

struct NormalityReport {
  bool normal = false;
  Mat4r direct = Mat4r::Zero();    // BC − CB
  Mat4r identity = Mat4r::Zero();  // 2[M_{p×r⊗i} + … + M_{t⊗(q×k)}]
  double agreement = 0.0;          // ‖direct − identity‖_F
};

/// normal iff ‖[B, C]‖_F ≤ 1e-10·(1 + ‖B‖_F‖C‖_F).
NormalityReport is_normal_type(const QuintupleDecomp& d);

/// The six equations that make [B, C] vanish for a canonical element, split
/// by which of p = (−a₂, 0, 0), q = (0, b₂, 0) is nonzero:
///   i)   p ≠ 0, q = 0:  a₁ = a₃ = c₁ = c₃ = 0
///   ii)  p ≠ 0, q ≠ 0:  a₁ = a₃ = b₁ = b₃ = 0 and either c₁ = c₃ = 0, or
///                       |a₂| = |b₂| with c₃b₂ = c₁a₂
///   iii) p = 0, q ≠ 0:  b₁ = b₃ = c₁ = c₃ = 0
/// With p = q = 0 the element is always of normal type.
bool canonical_normality_conditions(const Vec3& a, const Vec3& b, const Vec3& c, double tol = 1e-10);

/// Y₁ = i(Σ aᵢ I⊗σᵢ + Σ bᵢ σᵢ⊗I), Y₂ = iΣ cᵢ σᵢ⊗σᵢ commute iff for every
/// l with {m, n} the other two indices a_l·c_m = b_l·c_n and a_l·c_n = b_l·c_m.
bool local_vs_interaction_commute(const Vec3& a, const Vec3& b, const Vec3& c, double tol = 1e-10);

/// ‖[Y₁, Y₂]‖_F computed directly.
double local_vs_interaction_commutator(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace qtexp
