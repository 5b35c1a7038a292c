// Copyright 2026 The qperm Authors
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

#ifndef QPERM_CLI_H
#define QPERM_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qperm {

/// Exit codes of the command-line tool.
constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --output names a file; diagnostics go to `err`.
///
/// Subcommands: verify, moments, density, mc, s4, weingarten.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qperm

#endif
