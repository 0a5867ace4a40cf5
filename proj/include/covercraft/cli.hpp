// Copyright 2026 The covercraft Authors.
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

#include <iosfwd>
#include <string>
#include <vector>

namespace covercraft {

/// Exit codes: 0 completed, 1 counterexample to a checked property found,
/// 2 invalid input, 3 budget or limit exhausted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;

/// Runs one CLI invocation (argv without the program name). stdin-backed
/// inputs use "-" as the file name. The COVERCRAFT_LIMIT environment
/// variable overrides the element count limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covercraft
