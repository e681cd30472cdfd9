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

#include <complex>

#include <Eigen/Dense>

namespace qtexp {

using cplx = std::complex<double>;

using Mat4c = Eigen::Matrix4cd;
using Mat4r = Eigen::Matrix4d;
using Mat3c = Eigen::Matrix3cd;
using Mat3r = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

inline constexpr cplx kI{0.0, 1.0};

/// Default absolute tolerance for structure predicates, scaled by max(1, ‖X‖_F).
inline constexpr double kStructureTol = 1e-10;

}  // namespace qtexp
