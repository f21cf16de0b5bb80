// Copyright 2026 The LipTest Authors
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

#ifndef LIPTEST_CLI_HPP_
#define LIPTEST_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace liptest {

/// Command-line entry point, separated from main() so tests can drive it
/// in-process. `args` excludes the program name. The JSON report goes to
/// `out`; diagnostics go to `err`.
///
/// Exit codes: 0 for YES / pass, 1 for NO / FAILURE / failed suites,
/// 2 for usage or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace liptest

#endif  // LIPTEST_CLI_HPP_
