// SPDX-License-Identifier: Apache-2.0
//
// ndtlab: delivery-time analysis for cache-aided broadcast-relay networks
// Copyright (C) 2026 The ndtlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NDTLAB_TOOLS_CLI_HPP
#define NDTLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ndtlab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,         // bad flags or an invalid configuration
  kExitVerification = 3,  // schedule checks or slope checks failed
  kExitIo = 4,            // output file could not be written
};

/// Runs one subcommand (`bounds`, `sweep`, `regions`, `schedule`,
/// `simulate`). `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ndtlab::cli

#endif  // NDTLAB_TOOLS_CLI_HPP
