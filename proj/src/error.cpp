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

#include "qtexp/error.hpp"

#include <sstream>

namespace qtexp {
namespace {

std::string format_message(const std::string& predicate, double residual, const std::string& detail) {
  std::ostringstream os;
  os << "structure check '" << predicate << "' failed (residual " << residual << ")";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

}  // namespace

StructureError::StructureError(std::string predicate, double residual)
    : StructureError(std::move(predicate), residual, "") {}

StructureError::StructureError(std::string predicate, double residual, const std::string& detail)
    : Error(format_message(predicate, residual, detail)), predicate_(std::move(predicate)), residual_(residual) {}

}  // namespace qtexp
