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

#include "qtexp/closed_form.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "qtexp/hh_iso.hpp"
#include "qtexp/linalg3.hpp"
#include "qtexp/minpoly.hpp"
#include "qtexp/oracle.hpp"

namespace qtexp {
namespace {

constexpr std::array<std::pair<Method, const char*>, 11> kMethodNames = {{
    {Method::quad_I, "quad-I"},
    {Method::quad_II, "quad-II"},
    {Method::cubic_I, "cubic-I"},
    {Method::tridiag, "tridiag"},
    {Method::perskew, "perskew"},
    {Method::skewham, "skewham"},
    {Method::imsym, "imsym"},
    {Method::bisym, "bisym"},
    {Method::normal_split, "normal-split"},
    {Method::magic, "magic"},
    {Method::oracle, "oracle"},
}};

Mat4c pk(Pauli s, Pauli t) { return pauli_kron({s, t}); }

// H² = λ²I: e^{iH} = cos λ I + i(sin λ/λ)H.
Mat4c exp_i_involutive(const Mat4c& h) {
  const double lambda2 = std::max(0.0, (h * h).trace().real() / 4.0);
  return cos_sqrt(lambda2) * Mat4c::Identity() + kI * sinc_sqrt(lambda2) * h;
}

// e^{M} for a real M with M² = −θ²I.
Mat4c exp_real_unit(const Mat4r& m, double theta) {
  return (std::cos(theta) * Mat4r::Identity() + sinc(theta) * m).cast<cplx>();
}

cplx phase(double b) { return std::polar(1.0, b); }

ExpResult finish(Mat4c u, Method m) {
  const double r = unitarity_residual(u);
  return {std::move(u), m, r};
}

Mat4c factor(const Vec3& u, const Vec3& v) {
  const double sigma2 = u.squaredNorm();
  const Mat4r m = tensor_matrix(PureQuat(u), PureQuat(v));
  return cos_sqrt(sigma2) * Mat4c::Identity() + kI * sinc_sqrt(sigma2) * m.cast<cplx>();
}

}  // namespace

std::string to_string(Method m) {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "oracle";
}

std::optional<Method> method_from_string(const std::string& s) {
  for (const auto& [method, name] : kMethodNames)
    if (s == name) return method;
  return std::nullopt;
}

double unitarity_residual(const Mat4c& u) { return (u.adjoint() * u - Mat4c::Identity()).norm(); }

ExpResult exp_tridiag(const SymTriDiag& s) {
  const PureQuat p{0.0, s.beta / 2.0, 0.0};
  const PureQuat r{0.0, (s.gamma - s.alpha) / 2.0, 0.0};
  const PureQuat q{s.beta / 2.0, 0.0, (s.gamma + s.alpha) / 2.0};
  const Mat4r g1 = tensor_matrix(p, Quat::unit_i()) + tensor_matrix(r, Quat::unit_k());
  const Mat4r g2 = tensor_matrix(q, Quat::unit_j());
  const double l1 = p.vec().squaredNorm() + r.vec().squaredNorm();
  const double l2 = q.vec().squaredNorm();
  const Mat4c f1 = cos_sqrt(l1) * Mat4c::Identity() + kI * sinc_sqrt(l1) * g1.cast<cplx>();
  const Mat4c f2 = cos_sqrt(l2) * Mat4c::Identity() + kI * sinc_sqrt(l2) * g2.cast<cplx>();
  return finish(f1 * f2, Method::tridiag);
}

std::array<Mat4c, 2> perskew_factors(const Su4Element& x) {
  const PauliCoeffs& c = x.pauli();
  const Mat4c h1 = c.beta(2) * pk(Pauli::Z, Pauli::I) + c.gamma(0, 2) * pk(Pauli::X, Pauli::Z) +
                   c.gamma(1, 2) * pk(Pauli::Y, Pauli::Z);
  const Mat4c h2 = c.alpha(2) * pk(Pauli::I, Pauli::Z) + c.gamma(2, 0) * pk(Pauli::Z, Pauli::X) +
                   c.gamma(2, 1) * pk(Pauli::Z, Pauli::Y);
  return {exp_i_involutive(h1), exp_i_involutive(h2)};
}

ExpResult exp_perskew(const Su4Element& x, double tol) {
  const double r = perskew_residual(x);
  if (r > tol * structure_scale(x.entries())) throw StructureError("perskew", r);
  const auto f = perskew_factors(x);
  return finish(phase(x.scalar_part()) * f[0] * f[1], Method::perskew);
}

ExpResult exp_skewham(const Su4Element& x, double tol) {
  const double r = skewham_residual(x);
  if (r > tol * structure_scale(x.entries())) throw StructureError("skewham", r);
  const PauliCoeffs& c = x.pauli();
  const Mat4c h = c.gamma(1, 1) * pk(Pauli::Y, Pauli::Y) + c.alpha(2) * pk(Pauli::I, Pauli::Z) +
                  c.alpha(0) * pk(Pauli::I, Pauli::X) + c.gamma(2, 1) * pk(Pauli::Z, Pauli::Y) +
                  c.gamma(0, 1) * pk(Pauli::X, Pauli::Y);
  return finish(phase(x.scalar_part()) * exp_i_involutive(h), Method::skewham);
}

std::array<Mat4c, 3> imsym_factors(const Mat3r& cmat) {
  const SymEigen3 eig = sym3_eigen(cmat.transpose() * cmat);
  std::array<Mat4c, 3> out;
  for (int k = 0; k < 3; ++k) {
    const Vec3 v = eig.vectors.col(k);
    out[static_cast<std::size_t>(k)] = factor(cmat * v, v);
  }
  return out;
}

ExpResult exp_imaginary_symmetric(const Su4Element& x, double tol) {
  const double r = imaginary_symmetric_residual(x);
  if (r > tol * structure_scale(x.entries())) throw StructureError("imaginary-symmetric", r);
  const auto f = imsym_factors(x.quintuple().cmat);
  return finish(phase(x.scalar_part()) * f[0] * f[1] * f[2], Method::imsym);
}

std::optional<ExpResult> exp_bisymmetric_fast(const Su4Element& x, double tol) {
  if (!is_imaginary_symmetric(x, tol)) return std::nullopt;
  const Mat3r& c = x.quintuple().cmat;
  const auto pattern = bisym_pattern(c, tol);
  if (!pattern) return std::nullopt;
  const auto [row, col] = *pattern;

  const int b1 = (col + 1) % 3, b2 = (col + 2) % 3;
  const Vec3 pt = c.col(b1), qt = c.col(b2);
  const double theta = 0.5 * std::atan2(2.0 * pt.dot(qt), qt.squaredNorm() - pt.squaredNorm());
  const double ct = std::cos(theta), st = std::sin(theta);
  Vec3 v0 = Vec3::Zero(), v1 = Vec3::Zero(), v2 = Vec3::Zero();
  v0(col) = 1.0;
  v1(b1) = ct;
  v1(b2) = -st;
  v2(b1) = st;
  v2(b2) = ct;
  Vec3 u0 = Vec3::Zero();
  u0(row) = c(row, col);

  const Mat4c u = factor(u0, v0) * factor(c * v1, v1) * factor(c * v2, v2);
  return finish(phase(x.scalar_part()) * u, Method::bisym);
}

ExpResult exp_normal_split(const Su4Element& x) {
  const QuintupleDecomp& d = x.quintuple();
  const NormalityReport rep = is_normal_type(d);
  if (!rep.normal) throw StructureError("normal-type", rep.direct.norm());
  const Mat4r mp = tensor_matrix(d.p, Quat::one());
  const Mat4r mq = tensor_matrix(Quat::one(), d.q);
  const Mat4c eb = exp_real_unit(mp, d.p.vec().norm()) * exp_real_unit(mq, d.q.vec().norm());
  const auto f = imsym_factors(d.cmat);
  return finish(phase(x.scalar_part()) * eb * f[0] * f[1] * f[2], Method::normal_split);
}

std::optional<ExpResult> exp_structured(const Su4Element& x, double tol) {
  if (const auto s = tridiag_of(x, tol)) {
    ExpResult r = exp_tridiag(*s);
    r.u *= phase(x.scalar_part());
    return r;
  }
  if (is_perskew(x, tol)) return exp_perskew(x, tol);
  if (is_skewham(x, tol)) return exp_skewham(x, tol);
  if (is_imaginary_symmetric(x, tol)) {
    if (auto r = exp_bisymmetric_fast(x, tol)) return r;
    return exp_imaginary_symmetric(x, tol);
  }
  return std::nullopt;
}

ExpResult exp_oracle(const Su4Element& x) { return finish(expm_reference(x.entries()), Method::oracle); }

namespace {

std::optional<ExpResult> exp_auto_closed(const Su4Element& x, const AutoOptions& o) {
  const double tol = o.structure_tol;
  if (const auto s = tridiag_of(x, tol)) {
    ExpResult r = exp_tridiag(*s);
    r.u *= phase(x.scalar_part());
    return r;
  }
  if (is_perskew(x, tol)) return exp_perskew(x, tol);
  if (is_skewham(x, tol)) return exp_skewham(x, tol);

  const MinPolyClass cls = classify(x, o.classify_tol);
  const Mat4c y = x.traceless();
  const cplx ph = phase(x.scalar_part());
  if (cls.tag == MinPolyTag::quadratic_I) return finish(ph * exp_quadratic_I(y, cls.c2), Method::quad_I);

  if (is_imaginary_symmetric(x, tol)) {
    if (auto r = exp_bisymmetric_fast(x, tol)) return r;
    return exp_imaginary_symmetric(x, tol);
  }
  if (is_normal_type(x.quintuple()).normal) return exp_normal_split(x);

  if (cls.tag == MinPolyTag::quadratic_II)
    return finish(ph * exp_quadratic_II(y, cls.beta, cls.gamma), Method::quad_II);
  if (cls.tag == MinPolyTag::cubic_I) return finish(ph * exp_cubic_I(y, cls.c2), Method::cubic_I);

  const Mat4c& v = magic_basis();
  const Su4Element forward = magic_conjugate(x);
  if (const auto r = exp_structured(forward, tol))
    return finish(v.adjoint() * r->u * v, Method::magic);
  const Su4Element backward = magic_unconjugate(x);
  if (const auto r = exp_structured(backward, tol))
    return finish(v * r->u * v.adjoint(), Method::magic);
  return std::nullopt;
}

}  // namespace

ExpResult exp_auto(const Su4Element& x, const AutoOptions& opts) {
  std::optional<ExpResult> r = exp_auto_closed(x, opts);
  if (!r) {
    if (!opts.allow_oracle) throw StructureError("closed-form", 0.0, "no closed form matched");
    return exp_oracle(x);
  }
  if (opts.verify) r->residual = std::max(r->residual, (r->u - expm_reference(x.entries())).norm());
  return *r;
}

}  // namespace qtexp
