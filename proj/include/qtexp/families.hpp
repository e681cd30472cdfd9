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

// Random members of each structured family, with coefficients drawn
// uniformly from [−5, 5]. Used by the benchmark and the test suites.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qtexp/closed_form.hpp"
#include "qtexp/su4.hpp"

namespace qtexp {

enum class Family { tridiag, perskew, skewham, imsym, bisym, normal_split, quad_I, quad_II, cubic_I };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);
const std::vector<Family>& all_families();

using Rng = std::mt19937_64;

/// Haar-distributed unitary from the QR factorization of a Gaussian matrix.
Mat4c random_unitary(Rng& rng);

/// Random element of SO(4).
Mat4r random_rotation(Rng& rng);

/// Dense anti-Hermitian matrix with entries of size up to `scale`.
Su4Element random_su4(Rng& rng, double scale = 5.0);

Su4Element random_member(Family f, Rng& rng, double scale = 5.0);

/// Exponential by the family's own closed form.
ExpResult exp_family(Family f, const Su4Element& x);

}  // namespace qtexp
