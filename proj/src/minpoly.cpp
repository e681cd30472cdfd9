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

#include "qtexp/minpoly.hpp"

#include <algorithm>
#include <cmath>

#include "qtexp/error.hpp"
#include "qtexp/hh_iso.hpp"
#include "qtexp/linalg3.hpp"

namespace qtexp {
namespace {

bool near_zero(double v, double limit) { return std::abs(v) <= limit; }

}  // namespace

CharPolyCoeffs charpoly(const Mat4c& x) {
  const Mat4c x2 = x * x;
  const cplx p2 = x2.trace();
  const cplx p3 = (x2 * x).trace();
  const cplx p4 = (x2 * x2).trace();
  CharPolyCoeffs c;
  c.mu = (-p2 / 2.0).real();
  c.nu = cplx(0.0, (-p3 / 3.0).imag());
  c.pi = ((p2 * p2 / 2.0 - p4) / 4.0).real();
  return c;
}

CharPolyCoeffs charpoly(const Su4Element& x) { return charpoly(x.traceless()); }

double cayley_hamilton_residual(const Mat4c& x, const CharPolyCoeffs& c) {
  const Mat4c x2 = x * x;
  const Mat4c r = x2 * x2 + c.mu * x2 + c.nu * x + c.pi * Mat4c::Identity();
  const double n = x.norm();
  return r.norm() / std::max(1.0, n * n * n * n);
}

CharPolyCoeffs canonical_charpoly(const Vec3& a, const Vec3& b, const Vec3& c) {
  CharPolyCoeffs out;
  out.mu = 2.0 * (a.squaredNorm() + b.squaredNorm() + c.squaredNorm());
  out.nu = cplx(0.0, 8.0 * (a.cwiseProduct(b).dot(c) - c.prod()));
  out.pi = charpoly(canonical_matrix(a, b, c)).pi;
  return out;
}

double expanded_pi_formula(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 a2 = a.cwiseAbs2(), b2 = b.cwiseAbs2(), c2 = c.cwiseAbs2();
  const double s = a2.sum() + b2.sum() + c2.sum();
  const double t1 = (a2 + b2 + c2).cwiseAbs2().sum();
  const double t2 = 4.0 * a2.sum() * b2.sum();
  const double t3 = 4.0 * (a2.cwiseProduct(c2) + b2.cwiseProduct(c2)).sum();
  double t4 = 0.0, t5 = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      t4 += 2.0 * c2(i) * c2(j);
      const int k = 3 - i - j;
      t5 += 4.0 * a(i) * b(i) * c(j) * c(k);
    }
  }
  return 0.25 * (2.0 * s * s - 4.0 * (t1 + t2 + t3 + t4 - t5));
}

std::string to_string(MinPolyTag tag) {
  switch (tag) {
    case MinPolyTag::quadratic_I: return "quadratic-I";
    case MinPolyTag::quadratic_II: return "quadratic-II";
    case MinPolyTag::cubic_I: return "cubic-I";
    case MinPolyTag::quartic_distinct: return "quartic-distinct";
    case MinPolyTag::other: return "other";
  }
  return "other";
}

MinPolyClass classify(const Su4Element& x, double tol) {
  const Mat4c y = x.traceless();
  MinPolyClass out;
  out.coeffs = charpoly(y);
  if (y.norm() == 0.0) return out;

  const double mu = out.coeffs.mu;
  const double nu = std::abs(out.coeffs.nu);
  const double pi = out.coeffs.pi;
  const bool nu_zero = nu <= tol * std::pow(mu, 1.5);

  if (nu_zero && near_zero(mu * mu - 4.0 * pi, tol * mu * mu)) {
    out.tag = MinPolyTag::quadratic_I;
    out.c2 = mu / 2.0;
    return out;
  }
  if (nu_zero && near_zero(pi, tol * mu * mu)) {
    out.tag = MinPolyTag::cubic_I;
    out.c2 = mu;
    return out;
  }
  const QuintupleDecomp& d = x.quintuple();
  if (const auto bt = check_quadratic_II_conditions(d, tol)) {
    out.tag = MinPolyTag::quadratic_II;
    out.beta_tilde = *bt;
    out.beta = kI * (*bt);
    out.gamma = d.p.vec().squaredNorm() + d.q.vec().squaredNorm() + d.cmat.squaredNorm();
    return out;
  }
  out.tag = nu_zero ? MinPolyTag::quartic_distinct : MinPolyTag::other;
  return out;
}

std::optional<double> check_quadratic_II_conditions(const QuintupleDecomp& d, double tol) {
  const Vec3 p = d.p.vec();
  const Vec3 q = d.q.vec();
  const Mat3r& c = d.cmat;
  const double n2 = p.squaredNorm() + q.squaredNorm() + c.squaredNorm();
  const double small = tol * std::max(1.0, std::sqrt(n2));
  const Mat3r co = cofactor_matrix(c);

  double bt = 0.0;
  if (q.norm() > small) {
    bt = q.dot(c.transpose() * p) / q.squaredNorm();
  } else if (p.norm() > small) {
    bt = p.dot(c * q) / p.squaredNorm();
  } else {
    const double cc = c.squaredNorm();
    if (cc == 0.0) return std::nullopt;
    bt = -c.cwiseProduct(co).sum() / cc;
  }
  if (std::abs(bt) <= small) return std::nullopt;

  const double limit = tol * std::max(1.0, n2);
  if ((c.transpose() * p - bt * q).norm() > limit) return std::nullopt;
  if ((c * q - bt * p).norm() > limit) return std::nullopt;
  if ((p * q.transpose() - co - bt * c).norm() > limit) return std::nullopt;
  return bt;
}

Su4Element construct_quadratic_II_example(const PureQuat& pq) {
  const Vec3 p = pq.vec();
  const double pp = p.squaredNorm();
  if (pp == 0.0) throw Error("construct_quadratic_II_example: p must be nonzero");
  const double bt = std::sqrt(1.0 + pp);
  const Mat3r root = Mat3r::Identity() + (bt - 1.0) * p * p.transpose() / pp;
  const Mat3r c = root * Vec3(1.0, 1.0, -1.0).asDiagonal();
  const Vec3 q = c.inverse() * (bt * p);
  return Su4Element(make_quintuple(p, q, c).matrix());
}

Su4Element construct_rank_one_example(const Vec3& u_dir, const Vec3& v_dir, double beta_tilde) {
  if (!(beta_tilde > 0.0)) throw Error("construct_rank_one_example: beta_tilde must be positive");
  if (u_dir.norm() == 0.0 || v_dir.norm() == 0.0) throw Error("construct_rank_one_example: zero direction");
  const double root = std::sqrt(beta_tilde);
  const Vec3 u = root * u_dir.normalized();
  const Vec3 v = root * v_dir.normalized();
  return Su4Element(make_quintuple(root * u, root * v, u * v.transpose()).matrix());
}

NormalityReport is_normal_type(const QuintupleDecomp& d) {
  const Mat4r b = d.real_part();
  const Mat4r c = d.imag_part();
  NormalityReport out;
  out.direct = b * c - c * b;

  const PureQuat ui{1.0, 0.0, 0.0}, uj{0.0, 1.0, 0.0}, uk{0.0, 0.0, 1.0};
  out.identity = 2.0 * (tensor_matrix(cross(d.p, d.r), ui.quat()) + tensor_matrix(cross(d.p, d.s), uj.quat()) +
                        tensor_matrix(cross(d.p, d.t), uk.quat()) + tensor_matrix(d.r, cross(d.q, ui)) +
                        tensor_matrix(d.s, cross(d.q, uj)) + tensor_matrix(d.t, cross(d.q, uk)));
  out.agreement = (out.direct - out.identity).norm();
  out.normal = out.direct.norm() <= 1e-10 * (1.0 + b.norm() * c.norm());
  return out;
}

bool canonical_normality_conditions(const Vec3& a, const Vec3& b, const Vec3& c, double tol) {
  const double scale = std::max({1.0, a.norm(), b.norm(), c.norm()});
  const double lin = tol * scale;
  const double quad = tol * scale * scale;
  const bool p_zero = std::abs(a(1)) <= lin;
  const bool q_zero = std::abs(b(1)) <= lin;
  auto zero = [&](double v) { return std::abs(v) <= lin; };

  if (p_zero && q_zero) return true;
  if (!p_zero && q_zero) return zero(a(0)) && zero(a(2)) && zero(c(0)) && zero(c(2));
  if (p_zero && !q_zero) return zero(b(0)) && zero(b(2)) && zero(c(0)) && zero(c(2));

  if (!(zero(a(0)) && zero(a(2)) && zero(b(0)) && zero(b(2)))) return false;
  if (zero(c(0)) && zero(c(2))) return true;
  return std::abs(std::abs(a(1)) - std::abs(b(1))) <= lin && std::abs(c(2) * b(1) - c(0) * a(1)) <= quad;
}

bool local_vs_interaction_commute(const Vec3& a, const Vec3& b, const Vec3& c, double tol) {
  const double scale = std::max({1.0, a.norm(), b.norm(), c.norm()});
  const double limit = tol * scale * scale;
  for (int l = 0; l < 3; ++l) {
    const int m = (l + 1) % 3, n = (l + 2) % 3;
    if (std::abs(a(l) * c(m) - b(l) * c(n)) > limit) return false;
    if (std::abs(a(l) * c(n) - b(l) * c(m)) > limit) return false;
  }
  return true;
}

double local_vs_interaction_commutator(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Mat4c y1 = canonical_matrix(a, b, Vec3::Zero());
  const Mat4c y2 = canonical_matrix(Vec3::Zero(), Vec3::Zero(), c);
  return (y1 * y2 - y2 * y1).norm();
}

}  // namespace qtexp
