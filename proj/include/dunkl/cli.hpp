/*
 * Copyright (c) 2026, the dunkl project authors.  All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// Command-line front end. run_cli parses the argument vector (without the
// program name) and executes one subcommand: classify, apply, enumerate,
// perron, pointcheck, or selftest. The machine-readable JSON report goes
// to `out`, the human summary to `err` (suppressed by --json).
//
// Exit codes: 0 success; 1 the run completed but reported at least one
// negative verdict; 2 usage or input error; 3 internal invariant
// violation.

#ifndef DUNKL_CLI_HPP
#define DUNKL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dunkl {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dunkl

#endif  // DUNKL_CLI_HPP
