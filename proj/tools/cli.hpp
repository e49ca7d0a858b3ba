// Copyright 2026 The gmean Authors
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

#ifndef GMEAN_TOOLS_CLI_HPP
#define GMEAN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gmean::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
};

/// Runs one invocation. args excludes the program name. Standard output is
/// written only on success; diagnostics go to err as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmean::cli

#endif  // GMEAN_TOOLS_CLI_HPP
