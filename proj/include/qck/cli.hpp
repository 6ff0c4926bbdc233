// Copyright 2026 The qck Authors
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

#ifndef QCK_CLI_HPP
#define QCK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qck {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,         // malformed input, bad flags, unknown kind
  kExitNotPositive = 3,   // decompose: input is not a positive map
  kExitNotConverged = 4,  // decompose: residuals above the tolerance flags
  kExitResidual = 5,      // verify: residual breach
};

/// Runs the command line `qck <args...>`. `args` excludes the program name.
/// JSON goes to `out`, diagnostics to `err`; "-" (the default input) reads
/// from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace qck

#endif  // QCK_CLI_HPP
