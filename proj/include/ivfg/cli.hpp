// Copyright 2026 The ivfg Authors
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

#ifndef IVFG_CLI_HPP
#define IVFG_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivfg/graph.hpp"

namespace ivfg::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,    // computed a negative answer (invalid graph, no morphism)
  kInputError = 2,  // could not compute: usage, parse, precondition errors
};

/// Runs one command line. args[0] is the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.3,0.6" or "[0.3,0.6]".
std::optional<MembershipInterval> parse_interval(std::string_view text);

}  // namespace ivfg::cli

#endif  // IVFG_CLI_HPP
