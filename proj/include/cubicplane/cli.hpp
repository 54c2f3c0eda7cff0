// Copyright 2026 The cubicplane Authors
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

#ifndef CUBICPLANE_CLI_HPP
#define CUBICPLANE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cubicplane {

namespace exit_code {
constexpr int kOk = 0;
constexpr int kRejected = 1;      // input violates a mathematical hypothesis
constexpr int kInconsistent = 2;  // internal cross-check failed
constexpr int kUsage = 3;         // usage, parse or unsupported-field error
}  // namespace exit_code

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubicplane

#endif  // CUBICPLANE_CLI_HPP
