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

#include "qtexp/applications.hpp"

#include "qtexp/error.hpp"
#include "qtexp/hh_iso.hpp"
#include "qtexp/structure.hpp"

namespace qtexp {
namespace {

ExpResult bisym_or_throw(const Su4Element& x) {
  auto r = exp_bisymmetric_fast(x);
  if (!r) throw StructureError("bisym", imaginary_symmetric_residual(x), "generator lost its 2+1 pattern");
  return *r;
}

}  // namespace

Su4Element rabi_generator(const RabiParams& p) {
  const SymTriDiag s{-p.g1 * p.t, -p.g2 * p.t, -p.g3 * p.t};
  return Su4Element(s.matrix() - kI * (p.E0 * p.t) * Mat4c::Identity());
}

Su4Element josephson_generator(const JosephsonParams& p) {
  Mat4r h;
  h << p.E00, -0.5 * p.EJ1, -0.5 * p.EJ2, 0.0,
       -0.5 * p.EJ1, p.E10, 0.0, -0.5 * p.EJ2,
       -0.5 * p.EJ2, 0.0, p.E10, -0.5 * p.EJ1,
       0.0, -0.5 * p.EJ2, -0.5 * p.EJ1, p.E00;
  return Su4Element(-kI * p.t * h.cast<cplx>());
}

Su4Element scalar_coupling_generator(const ScalarCouplingParams& p) {
  auto pk = [](Pauli s, Pauli t) { return pauli_kron({s, t}); };
  const Mat4c h = p.a * Mat4c::Identity() + p.b * pk(Pauli::Z, Pauli::I) + p.c * pk(Pauli::I, Pauli::Z) +
                  p.d * pk(Pauli::Z, Pauli::Z) + p.e * pk(Pauli::X, Pauli::X) + p.f * pk(Pauli::Y, Pauli::Y);
  return Su4Element(kI * p.t * h);
}

ExpResult rabi_propagator(const RabiParams& p) {
  const SymTriDiag s{-p.g1 * p.t, -p.g2 * p.t, -p.g3 * p.t};
  ExpResult r = exp_tridiag(s);
  r.u *= std::polar(1.0, -p.E0 * p.t);
  return r;
}

ExpResult josephson_propagator(const JosephsonParams& p) { return bisym_or_throw(josephson_generator(p)); }

ExpResult scalar_coupling_propagator(const ScalarCouplingParams& p) {
  ScalarCouplingParams rest = p;
  rest.a = 0.0;
  ExpResult r = bisym_or_throw(scalar_coupling_generator(rest));
  r.u *= std::polar(1.0, p.a * p.t);
  return r;
}

}  // namespace qtexp
