// Copyright 2026 The pogs Authors
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

#ifndef POGS_CLI_HPP_
#define POGS_CLI_HPP_

#include <ostream>
#include <span>
#include <string>

namespace pogs {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,        // every check passed or was consistent
  kExitFailed = 1,    // a property or equivalence failed; witness reported
  kExitUsage = 2,     // input, file or usage error
};

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics and usage text to `err`.
int run_command(std::span<const std::string> args, std::ostream& out,
                std::ostream& err);

}  // namespace pogs

#endif  // POGS_CLI_HPP_
