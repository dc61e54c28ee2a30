// Copyright 2026 The lcnns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcnns/mapping.hpp"

namespace lcnns::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Mapping files hold one "logical physical" pair per line; '#' starts a
/// comment. Every logical index 0..n-1 must appear exactly once.
Mapping parse_mapping(std::string_view text);
std::string write_mapping(const Mapping& pi);

/// Splits "a,b(1,2),c" on top-level commas.
std::vector<std::string> split_list(std::string_view text);

}  // namespace lcnns::cli
