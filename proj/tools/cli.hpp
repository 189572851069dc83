/* Copyright 2026 The taut Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// The taut command line, callable in-process.
//
// Exit codes: 0 holds / success, 1 fails (witness printed), 2 unreadable or
// malformed input and usage errors, 3 inconclusive at the configured bounds.

#ifndef TAUT_TOOLS_CLI_HPP
#define TAUT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace taut::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace taut::cli

#endif // TAUT_TOOLS_CLI_HPP
