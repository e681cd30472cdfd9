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

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "qtexp/error.hpp"
#include "qtexp/structure.hpp"
#include "qtexp/su4.hpp"
#include "qtexp/types.hpp"

namespace qtexp {

enum class Method { quad_I, quad_II, cubic_I, tridiag, perskew, skewham, imsym, bisym, normal_split, magic, oracle };

std::string to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

struct ExpResult {
  Mat4c u = Mat4c::Identity();
  Method method = Method::oracle;
  /// ‖U*U − I‖_F, raised to ‖U − U_oracle‖_F when the oracle was consulted.
  double residual = 0.0;
};

double unitarity_residual(const Mat4c& u);

// Even functions of c evaluated from w = c², so the branch of the square
// root never matters. Series below |c| = 1e-4.
namespace detail {
inline constexpr double kSeriesCut = 1e-8;  // on |c²|
}

template <typename T>
T cos_sqrt(T w) {
  if (std::abs(w) < detail::kSeriesCut) return T(1) - w / T(2) + w * w / T(24);
  return std::cos(std::sqrt(w));
}

/// sin(c)/c.
template <typename T>
T sinc_sqrt(T w) {
  if (std::abs(w) < detail::kSeriesCut) return T(1) - w / T(6) + w * w / T(120);
  const T c = std::sqrt(w);
  return std::sin(c) / c;
}

/// (1 − cos c)/c².
template <typename T>
T versc_sqrt(T w) {
  if (std::abs(w) < detail::kSeriesCut) return T(0.5) - w / T(24) + w * w / T(720);
  return (T(1) - std::cos(std::sqrt(w))) / w;
}

/// sin(x)/x for real x.
inline double sinc(double x) { return sinc_sqrt(x * x); }

namespace detail {

template <typename Derived>
using CplxPlain = Eigen::Matrix<cplx, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>;

template <typename Derived>
CplxPlain<Derived> as_complex(const Eigen::MatrixBase<Derived>& x) {
  if (x.rows() != x.cols()) throw Error("closed-form exponential needs a square matrix");
  return x.template cast<cplx>();
}

template <typename Derived>
void require_annihilated(const char* name, const Eigen::MatrixBase<Derived>& residual, double norm_x, int degree) {
  const double r = residual.norm();
  if (!(r <= 1e-9 * std::max(1.0, std::pow(norm_x, degree))))
    throw StructureError(name, r, "matrix is not annihilated by the stated polynomial");
}

}  // namespace detail

/// X² = −c²I: e^X = cos(c)I + (sin c / c)X.
template <typename Derived>
detail::CplxPlain<Derived> exp_quadratic_I(const Eigen::MatrixBase<Derived>& x_in, cplx c2) {
  const auto x = detail::as_complex(x_in);
  const auto id = detail::CplxPlain<Derived>::Identity(x.rows(), x.cols());
  detail::require_annihilated("quadratic-I", (x * x + c2 * id).eval(), x.norm(), 2);
  return cos_sqrt(c2) * id + sinc_sqrt(c2) * x;
}

/// X² + 2βX + γI = 0 with β ≠ 0. With ω² = γ − β²,
/// e^X = e^{−β}[cos ω I + (sin ω / ω)(X + βI)].
template <typename Derived>
detail::CplxPlain<Derived> exp_quadratic_II(const Eigen::MatrixBase<Derived>& x_in, cplx beta, cplx gamma) {
  if (beta == cplx(0.0, 0.0)) throw StructureError("quadratic-II", 0.0, "beta is zero; use exp_quadratic_I");
  const auto x = detail::as_complex(x_in);
  const auto id = detail::CplxPlain<Derived>::Identity(x.rows(), x.cols());
  detail::require_annihilated("quadratic-II", (x * x + 2.0 * beta * x + gamma * id).eval(), x.norm(), 2);
  const cplx w = gamma - beta * beta;
  return std::exp(-beta) * (cos_sqrt(w) * id + sinc_sqrt(w) * (x + beta * id));
}

/// X³ + c²X = 0: e^X = I + (sin c / c)X + ((1 − cos c)/c²)X².
template <typename Derived>
detail::CplxPlain<Derived> exp_cubic_I(const Eigen::MatrixBase<Derived>& x_in, cplx c2) {
  const auto x = detail::as_complex(x_in);
  const auto id = detail::CplxPlain<Derived>::Identity(x.rows(), x.cols());
  const auto x2 = (x * x).eval();
  detail::require_annihilated("cubic-I", (x2 * x + c2 * x).eval(), x.norm(), 3);
  return id + sinc_sqrt(c2) * x + versc_sqrt(c2) * x2;
}

/// Two commuting factors built from p = (0, β/2, 0), r = (0, (γ−α)/2, 0),
/// q = (β/2, 0, (γ+α)/2):
/// e^S = [cos λ₁ I + i(sin λ₁/λ₁)(M_{p⊗i} + M_{r⊗k})]·[cos λ₂ I + i(sin λ₂/λ₂) M_{q⊗j}].
ExpResult exp_tridiag(const SymTriDiag& s);

/// The two commuting factors of a perskewsymmetric generator.
std::array<Mat4c, 2> perskew_factors(const Su4Element& x);

/// e^{ib}·[cos λ₁ I + i(sin λ₁/λ₁)(p₁σ_z⊗I + p₂σ_x⊗σ_z + ασ_y⊗σ_z)]
///       ·[cos λ₂ I + i(sin λ₂/λ₂)(q₁I⊗σ_z + q₂σ_z⊗σ_x + βσ_z⊗σ_y)].
ExpResult exp_perskew(const Su4Element& x, double tol = kStructureTol);

/// e^{ib}[cos λ I + i(sin λ/λ)(p₁σ_y⊗σ_y + p₂I⊗σ_z + p₃I⊗σ_x + cσ_z⊗σ_y + dσ_x⊗σ_y)].
ExpResult exp_skewham(const Su4Element& x, double tol = kStructureTol);

/// cos σ_k I + i(sin σ_k/σ_k) M_{u_k⊗v_k} for k = 0, 1, 2, where the v_k are
/// orthonormal eigenvectors of cmatᵀcmat and u_k = cmat·v_k. The factors
/// commute and their product is exp(i·Σ M_{c_j⊗e_j}).
std::array<Mat4c, 3> imsym_factors(const Mat3r& cmat);

ExpResult exp_imaginary_symmetric(const Su4Element& x, double tol = kStructureTol);

/// The same product with the 2×2 eigenproblem solved by one rotation angle
/// θ = ½·atan2(2p̃ᵀq̃, q̃ᵀq̃ − p̃ᵀp̃). Empty when the input is not imaginary
/// symmetric or cmat lacks the 2⊕1 pattern.
std::optional<ExpResult> exp_bisymmetric_fast(const Su4Element& x, double tol = kStructureTol);

/// e^X = e^{ib}·e^B·e^{iC} for [B, C] = 0, with
/// e^B = (cos|p| I + (sin|p|/|p|) M_{p⊗1})(cos|q| I + (sin|q|/|q|) M_{1⊗q}).
ExpResult exp_normal_split(const Su4Element& x);

struct AutoOptions {
  double structure_tol = kStructureTol;
  double classify_tol = 1e-9;
  bool allow_oracle = true;
  /// Compare against the oracle and fold the deviation into the residual.
  bool verify = false;
};

/// Structure patterns first, then the minimal polynomial, then the magic
/// basis, then the oracle. Throws Error("no closed form matched") when
/// allow_oracle is false and nothing applies.
ExpResult exp_auto(const Su4Element& x, const AutoOptions& opts = {});

/// The pattern stage of exp_auto (tridiag, perskew, skewham, bisym, imsym).
std::optional<ExpResult> exp_structured(const Su4Element& x, double tol = kStructureTol);

/// Oracle exponential wrapped as an ExpResult.
ExpResult exp_oracle(const Su4Element& x);

}  // namespace qtexp
