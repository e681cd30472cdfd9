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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtexp/error.hpp"
#include "qtexp/families.hpp"

namespace qtexp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kStructure = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct BenchRow {
  Family family;
  int trials = 0;
  double t_closed_ns = 0.0;  // median
  double t_oracle_ns = 0.0;  // median
  double max_err = 0.0;      // max ‖U_closed − U_oracle‖_F

  double speedup() const { return t_closed_ns > 0.0 ? t_oracle_ns / t_closed_ns : 0.0; }
};

/// Times the family's closed form and the oracle on `trials` random members.
BenchRow bench_family(Family f, int trials, std::uint64_t seed);

std::string bench_csv(const std::vector<BenchRow>& rows);

/// Full command line without the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtexp::cli
