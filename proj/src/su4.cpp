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

#include "qtexp/su4.hpp"

#include <cmath>

#include "qtexp/error.hpp"
#include "qtexp/linalg3.hpp"

namespace qtexp {
namespace {

double scaled(double tol, double norm) { return tol * std::max(1.0, norm); }

PauliCoeffs compute_pauli(const Mat4c& traceless) {
  const Mat4c h = -kI * traceless;
  PauliCoeffs c;
  for (int i = 0; i < 3; ++i) {
    const auto pi = static_cast<Pauli>(i + 1);
    c.alpha(i) = (pauli_kron({Pauli::I, pi}) * h).trace().real() / 4.0;
    c.beta(i) = (pauli_kron({pi, Pauli::I}) * h).trace().real() / 4.0;
    for (int j = 0; j < 3; ++j)
      c.gamma(i, j) = (pauli_kron({pi, static_cast<Pauli>(j + 1)}) * h).trace().real() / 4.0;
  }
  return c;
}

QuintupleDecomp compute_quintuple(const Mat4c& traceless) {
  const QtExpansion<double> re = expand(traceless.real().eval());
  const QtExpansion<double> im = expand(traceless.imag().eval());
  QuintupleDecomp d;
  d.p = PureQuat(re.coeff(1, 0), re.coeff(2, 0), re.coeff(3, 0));
  d.q = PureQuat(re.coeff(0, 1), re.coeff(0, 2), re.coeff(0, 3));
  d.cmat = im.coeff.block<3, 3>(1, 1);
  d.r = PureQuat(Vec3(d.cmat.col(0)));
  d.s = PureQuat(Vec3(d.cmat.col(1)));
  d.t = PureQuat(Vec3(d.cmat.col(2)));

  const double residual = (d.matrix() - traceless).norm();
  if (residual > scaled(1e-10, traceless.norm())) throw StructureError("su4-quintuple", residual);
  return d;
}

}  // namespace

Mat4r QuintupleDecomp::real_part() const {
  return tensor_matrix(p, Quat::one()) + tensor_matrix(Quat::one(), q);
}

Mat4r QuintupleDecomp::imag_part() const {
  return tensor_matrix(r, Quat::unit_i()) + tensor_matrix(s, Quat::unit_j()) + tensor_matrix(t, Quat::unit_k());
}

Mat4c QuintupleDecomp::matrix() const {
  return real_part().cast<cplx>() + kI * imag_part().cast<cplx>();
}

double anti_hermitian_residual(const Mat4c& x) { return (x + x.adjoint()).norm(); }

Su4Element::Su4Element(const Mat4c& entries, double tol) : entries_(entries) {
  const double residual = anti_hermitian_residual(entries);
  if (!std::isfinite(residual) || residual > scaled(tol, entries.norm()))
    throw StructureError("anti-hermitian", residual);
  scalar_ = entries.trace().imag() / 4.0;
  const Mat4c t = traceless();
  pauli_ = compute_pauli(t);
  quintuple_ = compute_quintuple(t);
}

Mat4c Su4Element::traceless() const { return entries_ - kI * scalar_ * Mat4c::Identity(); }

Su4Element Su4Element::without_scalar() const { return Su4Element(traceless()); }

PauliCoeffs pauli_coeffs(const Su4Element& x) { return x.pauli(); }

Mat4c hamiltonian(const PauliCoeffs& c) {
  Mat4c h = Mat4c::Zero();
  for (int i = 0; i < 3; ++i) {
    const auto pi = static_cast<Pauli>(i + 1);
    h += c.alpha(i) * pauli_kron({Pauli::I, pi});
    h += c.beta(i) * pauli_kron({pi, Pauli::I});
    for (int j = 0; j < 3; ++j) h += c.gamma(i, j) * pauli_kron({pi, static_cast<Pauli>(j + 1)});
  }
  return h;
}

Mat4c generator(const PauliCoeffs& c, double scalar) {
  return kI * (hamiltonian(c) + scalar * Mat4c::Identity());
}

QuintupleDecomp quintuple(const Su4Element& x) { return x.quintuple(); }

Mat4c from_quintuple(const QuintupleDecomp& d, double scalar) {
  return d.matrix() + kI * scalar * Mat4c::Identity();
}

QuintupleDecomp make_quintuple(const Vec3& p, const Vec3& q, const Mat3r& cmat) {
  QuintupleDecomp d;
  d.p = PureQuat(p);
  d.q = PureQuat(q);
  d.r = PureQuat(Vec3(cmat.col(0)));
  d.s = PureQuat(Vec3(cmat.col(1)));
  d.t = PureQuat(Vec3(cmat.col(2)));
  d.cmat = cmat;
  return d;
}

Mat4c canonical_matrix(const Vec3& a, const Vec3& b, const Vec3& c) {
  PauliCoeffs pc;
  pc.alpha = a;
  pc.beta = b;
  pc.gamma = c.asDiagonal();
  return generator(pc);
}

Mat4c CanonicalForm::matrix() const { return canonical_matrix(a, b, c); }

CanonicalForm canonicalize(const Su4Element& x) {
  const PauliCoeffs& pc = x.pauli();
  const RotationSvd3 svd = rotation_svd3(pc.gamma);
  // γ' = R1 γ R2ᵀ with R1 = uᵀ, R2 = vᵀ is diagonal.
  const Mat3r r1 = svd.u.transpose();
  const Mat3r r2 = svd.v.transpose();
  CanonicalForm out;
  out.c = svd.s;
  out.b = r1 * pc.beta;
  out.a = r2 * pc.alpha;
  out.u1 = su2_lift(r1);
  out.u2 = su2_lift(r2);
  out.local_unitary = kron(out.u1, out.u2);
  return out;
}

const Mat4c& magic_basis() {
  static const Mat4c v = [] {
    Mat4c m;
    m << 1, 0, 0, kI,
         0, kI, 1, 0,
         0, kI, -1, 0,
         1, 0, 0, -kI;
    return Mat4c(m / std::sqrt(2.0));
  }();
  return v;
}

Su4Element magic_conjugate(const Su4Element& x) {
  const Mat4c& v = magic_basis();
  return Su4Element(v * x.entries() * v.adjoint());
}

Su4Element magic_unconjugate(const Su4Element& x) {
  const Mat4c& v = magic_basis();
  return Su4Element(v.adjoint() * x.entries() * v);
}

Su4Element embed_su3(const Mat3c& y, double tol) {
  const double residual = (y + y.adjoint()).norm();
  const double bound = scaled(tol, y.norm());
  if (residual > bound) throw StructureError("anti-hermitian", residual, "embed_su3 input");
  const double trace = std::abs(y.trace());
  if (trace > bound) throw StructureError("traceless", trace, "embed_su3 input");
  Mat4c x = Mat4c::Zero();
  x.topLeftCorner<3, 3>() = y;
  return Su4Element(x);
}

}  // namespace qtexp
