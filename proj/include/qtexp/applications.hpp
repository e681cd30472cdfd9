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

// Propagators for three physical models: a resonantly driven four-level
// system, a pair of coupled Josephson qubits and the NMR scalar coupling.

#include "qtexp/closed_form.hpp"
#include "qtexp/su4.hpp"

namespace qtexp {

/// i dU/dt = (E0·I + C)U with C the zero-diagonal tridiagonal matrix of
/// laser amplitudes g1, g2, g3.
struct RabiParams {
  double g1 = 1.0, g2 = 1.0, g3 = 1.0;
  double E0 = 0.0;
  double t = 1.0;
};

/// The defaults are arbitrary.
struct JosephsonParams {
  double E00 = 1.0, E10 = 0.5, EJ1 = 0.3, EJ2 = 0.2;
  double t = 2.0;
};

/// X = i[aI + bσ_z⊗I + cI⊗σ_z + dσ_z⊗σ_z + eσ_x⊗σ_x + fσ_y⊗σ_y].
struct ScalarCouplingParams {
  double a = 0.1, b = 0.2, c = 0.3, d = 0.4, e = 0.5, f = 0.6;
  double t = 1.0;
};

/// −i(E0·I + C)t.
Su4Element rabi_generator(const RabiParams& p);
/// −iHt.
Su4Element josephson_generator(const JosephsonParams& p);
/// X·t.
Su4Element scalar_coupling_generator(const ScalarCouplingParams& p);

/// e^{−iE0t}·exp(−iCt) through the tridiagonal formula.
ExpResult rabi_propagator(const RabiParams& p);
/// Bisymmetric fast path; the scalar part ½(E00 + E10) becomes a phase.
ExpResult josephson_propagator(const JosephsonParams& p);
/// e^{iat} times the bisymmetric fast path on the other five terms.
ExpResult scalar_coupling_propagator(const ScalarCouplingParams& p);

}  // namespace qtexp
