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

// Entry-level structure predicates. Each predicate works on the traceless
// part of X and compares a residual against tol·max(1, ‖X‖_F).

#include <optional>
#include <utility>

#include "qtexp/su4.hpp"
#include "qtexp/types.hpp"

namespace qtexp {

/// i·T with T real symmetric tridiagonal, zero diagonal, off-diagonal
/// (alpha, beta, gamma).
struct SymTriDiag {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  Mat4c matrix() const;
};

/// The reversal matrix R₄ (ones on the anti-diagonal).
Mat4r reversal4();

/// J₄ = [[0, I₂], [−I₂, 0]].
Mat4r symplectic4();

/// ‖XᵀR₄ + R₄X‖_F on the traceless part.
double perskew_residual(const Su4Element& x);

/// ‖XᵀJ₄ − J₄X‖_F.
double skewham_residual(const Su4Element& x);

/// ‖Re X‖_F on the traceless part; zero iff X = iC with C real symmetric.
double imaginary_symmetric_residual(const Su4Element& x);

bool is_perskew(const Su4Element& x, double tol = kStructureTol);
bool is_skewham(const Su4Element& x, double tol = kStructureTol);
bool is_imaginary_symmetric(const Su4Element& x, double tol = kStructureTol);

/// Reads (alpha, beta, gamma) off the traceless part when it has the
/// symmetric tridiagonal shape.
std::optional<SymTriDiag> tridiag_of(const Su4Element& x, double tol = kStructureTol);

/// (row, col) such that row `row` and column `col` of the 3×3 matrix vanish
/// except for their shared entry; the remaining 2×2 block is then handled by
/// a single rotation.
std::optional<std::pair<int, int>> bisym_pattern(const Mat3r& cmat, double tol = kStructureTol);

/// The scale used by every predicate: max(1, ‖X‖_F).
double structure_scale(const Mat4c& x);

}  // namespace qtexp
