// Copyright 2026 The reqlint Authors.
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


// Command-line entry point.

#ifndef REQLINT_CLI_H_
#define REQLINT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace reqlint::cli {

enum ExitCode {
  kExitOk = 0,
  kExitGateFailed = 1,
  kExitUsage = 2,
  kExitInput = 3,
  kExitNetwork = 4,
};

// `args[0]` is the program name. Reports go to `out` unless --out names a
// file; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reqlint::cli

#endif  // REQLINT_CLI_H_
