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

#include <stdexcept>
#include <string>

namespace qtexp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural precondition failed. Carries the violated predicate and the
/// measured residual so callers (and the CLI) can report them.
class StructureError : public Error {
 public:
  StructureError(std::string predicate, double residual);
  StructureError(std::string predicate, double residual, const std::string& detail);

  const std::string& predicate() const noexcept { return predicate_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string predicate_;
  double residual_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtexp
