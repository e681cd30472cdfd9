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

#include "qtexp/families.hpp"

#include <array>
#include <utility>

#include <Eigen/QR>

#include "qtexp/error.hpp"
#include "qtexp/minpoly.hpp"

namespace qtexp {
namespace {

constexpr std::array<std::pair<Family, const char*>, 9> kFamilyNames = {{
    {Family::tridiag, "tridiag"},
    {Family::perskew, "perskew"},
    {Family::skewham, "skewham"},
    {Family::imsym, "imsym"},
    {Family::bisym, "bisym"},
    {Family::normal_split, "normal-split"},
    {Family::quad_I, "quad-I"},
    {Family::quad_II, "quad-II"},
    {Family::cubic_I, "cubic-I"},
}};

double uniform(Rng& rng, double scale) { return std::uniform_real_distribution<double>(-scale, scale)(rng); }

Mat4c pk(Pauli s, Pauli t) { return pauli_kron({s, t}); }

Mat4c conjugated_diagonal(Rng& rng, const Eigen::Vector4cd& d) {
  const Mat4c u = random_unitary(rng);
  return u * d.asDiagonal() * u.adjoint();
}

MinPolyClass expect_class(const Su4Element& x, MinPolyTag tag) {
  MinPolyClass c = classify(x);
  if (c.tag != tag) throw StructureError(to_string(tag), 0.0, "classified as " + to_string(c.tag));
  return c;
}

}  // namespace

std::string to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return name;
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (const auto& [family, name] : kFamilyNames)
    if (s == name) return family;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& entry : kFamilyNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

Mat4c random_unitary(Rng& rng) {
  std::normal_distribution<double> g;
  Mat4c z;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) z(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat4c> qr(z);
  Mat4c q = qr.householderQ();
  const Mat4c r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 4; ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

Mat4r random_rotation(Rng& rng) {
  std::normal_distribution<double> g;
  Mat4r z;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) z(i, j) = g(rng);
  Eigen::HouseholderQR<Mat4r> qr(z);
  Mat4r q = qr.householderQ();
  if (q.determinant() < 0.0) q.col(0) = -q.col(0);
  return q;
}

Su4Element random_su4(Rng& rng, double scale) {
  Mat4c a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cplx(uniform(rng, scale), uniform(rng, scale));
  return Su4Element(0.5 * (a - a.adjoint()));
}

Su4Element random_member(Family f, Rng& rng, double scale) {
  auto u = [&] { return uniform(rng, scale); };
  const Mat4c id = Mat4c::Identity();
  switch (f) {
    case Family::tridiag: {
      const SymTriDiag s{u(), u(), u()};
      return Su4Element(s.matrix());
    }
    case Family::perskew: {
      const Mat4c h = u() * pk(Pauli::Z, Pauli::I) + u() * pk(Pauli::X, Pauli::Z) + u() * pk(Pauli::Y, Pauli::Z) +
                      u() * pk(Pauli::I, Pauli::Z) + u() * pk(Pauli::Z, Pauli::X) + u() * pk(Pauli::Z, Pauli::Y);
      return Su4Element(kI * (h + u() * id));
    }
    case Family::skewham: {
      const Mat4c h = u() * pk(Pauli::Y, Pauli::Y) + u() * pk(Pauli::I, Pauli::Z) + u() * pk(Pauli::I, Pauli::X) +
                      u() * pk(Pauli::Z, Pauli::Y) + u() * pk(Pauli::X, Pauli::Y);
      return Su4Element(kI * (h + u() * id));
    }
    case Family::imsym: {
      Mat3r c;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j) = u();
      return Su4Element(make_quintuple(Vec3::Zero(), Vec3::Zero(), c).matrix() + kI * u() * id);
    }
    case Family::bisym: {
      const int row = std::uniform_int_distribution<int>(0, 2)(rng);
      const int col = std::uniform_int_distribution<int>(0, 2)(rng);
      Mat3r c = Mat3r::Zero();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if ((i == row) == (j == col)) c(i, j) = u();
      return Su4Element(make_quintuple(Vec3::Zero(), Vec3::Zero(), c).matrix() + kI * u() * id);
    }
    case Family::normal_split: {
      const double a = u(), w1 = u(), w2 = u();
      Mat4r d = Mat4r::Zero();
      d.topLeftCorner<2, 2>() << a, w1, -w1, a;
      d.bottomRightCorner<2, 2>() << -a, w2, -w2, -a;
      const Mat4r o = random_rotation(rng);
      const Mat4r n = o * d * o.transpose();
      const Mat4r b = 0.5 * (n - n.transpose());
      const Mat4r c = 0.5 * (n + n.transpose());
      return Su4Element(b.cast<cplx>() + kI * c.cast<cplx>());
    }
    case Family::quad_I: {
      const double c = u();
      return Su4Element(conjugated_diagonal(rng, kI * Eigen::Vector4cd(c, c, -c, -c)));
    }
    case Family::quad_II: {
      const double l = u();
      return Su4Element(conjugated_diagonal(rng, kI * Eigen::Vector4cd(3.0 * l, -l, -l, -l)));
    }
    case Family::cubic_I: {
      const double c = u();
      return Su4Element(conjugated_diagonal(rng, kI * Eigen::Vector4cd(0.0, 0.0, c, -c)));
    }
  }
  throw Error("random_member: unknown family");
}

ExpResult exp_family(Family f, const Su4Element& x) {
  switch (f) {
    case Family::tridiag: {
      const auto s = tridiag_of(x);
      if (!s) throw StructureError("tridiag", 0.0);
      ExpResult r = exp_tridiag(*s);
      r.u *= std::polar(1.0, x.scalar_part());
      return r;
    }
    case Family::perskew: return exp_perskew(x);
    case Family::skewham: return exp_skewham(x);
    case Family::imsym: return exp_imaginary_symmetric(x);
    case Family::bisym: {
      auto r = exp_bisymmetric_fast(x);
      if (!r) throw StructureError("bisym", 0.0, "no 2+1 pattern");
      return *r;
    }
    case Family::normal_split: return exp_normal_split(x);
    case Family::quad_I: {
      const MinPolyClass c = expect_class(x, MinPolyTag::quadratic_I);
      const Mat4c u = exp_quadratic_I(x.entries(), c.c2);
      return {u, Method::quad_I, unitarity_residual(u)};
    }
    case Family::quad_II: {
      const MinPolyClass c = expect_class(x, MinPolyTag::quadratic_II);
      const Mat4c u = exp_quadratic_II(x.entries(), c.beta, c.gamma);
      return {u, Method::quad_II, unitarity_residual(u)};
    }
    case Family::cubic_I: {
      const MinPolyClass c = expect_class(x, MinPolyTag::cubic_I);
      const Mat4c u = exp_cubic_I(x.entries(), c.c2);
      return {u, Method::cubic_I, unitarity_residual(u)};
    }
  }
  throw Error("exp_family: unknown family");
}

}  // namespace qtexp
