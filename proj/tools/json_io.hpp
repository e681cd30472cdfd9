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

// {"matrix": 4×4 array of [re, im] pairs, "scalar": optional real}
// The scalar b adds i·b·I to the matrix.

#include <string>

#include "json.hpp"
#include "qtexp/su4.hpp"

namespace qtexp::io {

struct MatrixInput {
  Mat4c matrix = Mat4c::Zero();
  double scalar = 0.0;
  nlohmann::json params;  // null unless present

  Mat4c generator() const { return matrix + kI * scalar * Mat4c::Identity(); }
};

/// Throws ParseError.
MatrixInput parse_matrix_json(const std::string& text);
MatrixInput load_matrix_file(const std::string& path);

nlohmann::json matrix_to_json(const Mat4c& m);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace qtexp::io
