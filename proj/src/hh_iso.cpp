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

#include "qtexp/hh_iso.hpp"

#include <sstream>

namespace qtexp {
namespace {

using C = std::complex<double>;
constexpr C kOne{1, 0};
constexpr C kMinusOne{-1, 0};
constexpr C kPlusI{0, 1};
constexpr C kMinusI{0, -1};

// Indexed by PauliLabel::index(): rows σ_s⊗σ_t with s, t ∈ {I, x, y, z}.
constexpr std::array<QtTerm, 16> kTable = {{
    {kOne, Unit::one, Unit::one},    // I⊗I
    {kOne, Unit::k, Unit::j},        // I⊗σx
    {kPlusI, Unit::i, Unit::one},    // I⊗σy
    {kOne, Unit::j, Unit::j},        // I⊗σz
    {kOne, Unit::i, Unit::k},        // σx⊗I
    {kOne, Unit::j, Unit::i},        // σx⊗σx
    {kMinusI, Unit::one, Unit::k},   // σx⊗σy
    {kMinusOne, Unit::k, Unit::i},   // σx⊗σz
    {kMinusI, Unit::one, Unit::j},   // σy⊗I
    {kPlusI, Unit::k, Unit::one},    // σy⊗σx
    {kOne, Unit::i, Unit::j},        // σy⊗σy
    {kPlusI, Unit::j, Unit::one},    // σy⊗σz
    {kOne, Unit::i, Unit::i},        // σz⊗I
    {kMinusOne, Unit::j, Unit::k},   // σz⊗σx
    {kMinusI, Unit::one, Unit::i},   // σz⊗σy
    {kOne, Unit::k, Unit::k},        // σz⊗σz
}};

const char* unit_name(Unit u) {
  switch (u) {
    case Unit::one: return "1";
    case Unit::i: return "i";
    case Unit::j: return "j";
    case Unit::k: return "k";
  }
  return "?";
}

const char* pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

}  // namespace

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

Eigen::Matrix4cd pauli_kron(PauliLabel label) { return kron(pauli_matrix(label.s), pauli_matrix(label.t)); }

QtTerm pauli_to_qt(PauliLabel label) { return kTable[static_cast<std::size_t>(label.index())]; }

Eigen::Matrix4cd qt_term_matrix(const QtTerm& term) {
  return term.scale * basis_matrix<double>(term.x, term.y).cast<std::complex<double>>();
}

std::array<PauliLabel, 16> all_pauli_labels() {
  std::array<PauliLabel, 16> out{};
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) out[static_cast<std::size_t>(4 * s + t)] = {static_cast<Pauli>(s), static_cast<Pauli>(t)};
  return out;
}

std::string to_string(PauliLabel label) {
  return std::string(pauli_name(label.s)) + "⊗" + pauli_name(label.t);
}

std::string to_string(const QtTerm& term) {
  std::ostringstream os;
  const auto& s = term.scale;
  if (s == kMinusOne) os << "-";
  else if (s == kPlusI) os << "i·";
  else if (s == kMinusI) os << "-i·";
  else if (s != kOne) os << s << "·";
  os << "M_{" << unit_name(term.x) << "⊗" << unit_name(term.y) << "}";
  return os.str();
}

}  // namespace qtexp
